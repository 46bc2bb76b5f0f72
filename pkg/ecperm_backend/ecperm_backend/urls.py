from django.urls import path
from recognition import views

urlpatterns = [
    path('api/recognize/', views.recognize_view, name='recognize'),
    path('api/verify/', views.verify_view, name='verify'),
    path('api/mdtree/', views.mdtree_view, name='mdtree'),
    path('api/classify/', views.classify_view, name='classify'),
]
