from django.db import models


class VerificationRun(models.Model):
    """One recorded command run with its per-suite summaries"""
    COMMAND_CHOICES = [
        ('table', 'Table'),
        ('verify', 'Verify'),
        ('inequalities', 'Inequalities'),
        ('conjecture', 'Conjecture'),
    ]

    command = models.CharField(max_length=20, choices=COMMAND_CHOICES)
    config = models.JSONField(default=dict)
    summary = models.JSONField(default=list)
    passed = models.BooleanField(default=False)
    created_at = models.DateTimeField(auto_now_add=True)

    def __str__(self):
        outcome = 'passed' if self.passed else 'failed'
        return f"{self.command} #{self.pk} ({outcome})"

    class Meta:
        db_table = 'verification_runs'
        ordering = ['-created_at']
