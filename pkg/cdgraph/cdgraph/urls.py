"""cdgraph URL Configuration. Only the admin is served; classification runs
are browsed there."""

from django.contrib import admin
from django.urls import path

urlpatterns = [
    path('admin/', admin.site.urls),
]
