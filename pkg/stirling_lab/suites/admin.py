from django.contrib import admin
from .models import VerificationRun


@admin.register(VerificationRun)
class VerificationRunAdmin(admin.ModelAdmin):
    list_display = ('id', 'command', 'passed', 'created_at')
    list_filter = ('command', 'passed', 'created_at')
    search_fields = ('command',)
    ordering = ('-created_at',)
    readonly_fields = ('command', 'config', 'summary', 'passed', 'created_at')
