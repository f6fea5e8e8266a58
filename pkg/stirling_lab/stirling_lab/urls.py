"""
URL configuration for stirling_lab project.

Only the admin site is routed; it browses the verification run ledger.
"""
from django.contrib import admin
from django.urls import path

urlpatterns = [
    path('admin/', admin.site.urls),
]
