"""
PolyProbe - FastAPI Application
Ana uygulama giriş noktası.
"""
from fastapi import FastAPI

from src.api.routes import router
from src.infrastructure.config import get_settings

settings = get_settings()

app = FastAPI(
    title="PolyProbe",
    description="Destek fonksiyonu oracle'ından politop köşe rekonstrüksiyonu",
    version=settings.VERSION,
    debug=settings.DEBUG
)

app.include_router(router)


@app.get("/", tags=["Root"])
async def root():
    """API kök endpoint'i."""
    return {
        "app": settings.APP_NAME,
        "version": settings.VERSION,
        "docs": "/docs"
    }
