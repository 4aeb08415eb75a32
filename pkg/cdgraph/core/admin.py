from django.contrib import admin

from .models import Classification, ClassificationRun


class SignatureFilter(admin.SimpleListFilter):
    title = 'signature'
    parameter_name = 'signature'

    def lookups(self, request, model_admin):
        pairs = model_admin.get_queryset(request) \
            .exclude(signature_a=None) \
            .values_list('signature_a', 'signature_b') \
            .distinct() \
            .order_by('-signature_a')
        return [("{},{}".format(a, b), "({},{})".format(a, b))
                for a, b in pairs]

    def queryset(self, request, queryset):
        if not self.value():
            return queryset
        a, b = self.value().split(',')
        return queryset.filter(signature_a=a, signature_b=b)


class ClassificationInline(admin.TabularInline):
    model = Classification
    fields = ('graph6', 'status', 'reason', 'provenance',)
    readonly_fields = fields
    extra = 0
    can_delete = False
    show_change_link = True


@admin.register(ClassificationRun)
class ClassificationRunAdmin(admin.ModelAdmin):
    list_display = ('__str__', 'order', 'strict', 'occurs_count',
                    'not_occurs_count', 'unknown_count',)
    list_filter = ('order', 'strict',)
    readonly_fields = ('started', 'finished',)
    inlines = (ClassificationInline,)


@admin.register(Classification)
class ClassificationAdmin(admin.ModelAdmin):
    list_display = ('graph6', 'run', 'signature', 'diameter', 'status',
                    'reason',)
    list_filter = ('status', 'reason', SignatureFilter, 'connected',
                   'run',)
    search_fields = ('graph6', 'key', 'provenance',)
