"""Request/response models, handlers, and the FastAPI application."""
