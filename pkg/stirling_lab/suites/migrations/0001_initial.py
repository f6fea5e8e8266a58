# Generated by Django 4.2.9 on 2026-10-17 09:12

from django.db import migrations, models


class Migration(migrations.Migration):

    initial = True

    dependencies = [
    ]

    operations = [
        migrations.CreateModel(
            name='VerificationRun',
            fields=[
                ('id', models.BigAutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('command', models.CharField(choices=[('table', 'Table'), ('verify', 'Verify'), ('inequalities', 'Inequalities'), ('conjecture', 'Conjecture')], max_length=20)),
                ('config', models.JSONField(default=dict)),
                ('summary', models.JSONField(default=list)),
                ('passed', models.BooleanField(default=False)),
                ('created_at', models.DateTimeField(auto_now_add=True)),
            ],
            options={
                'db_table': 'verification_runs',
                'ordering': ['-created_at'],
            },
        ),
    ]
