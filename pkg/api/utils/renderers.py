"""JSON rendering shared by the reports and the exports."""

# Django REST Framework
from rest_framework.renderers import JSONRenderer


def render_json(data, indent=2):
    return JSONRenderer().render(data, renderer_context={'indent': indent}).decode('utf-8')
