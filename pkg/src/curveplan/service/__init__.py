"""HTTP service layer: FastAPI app plus pydantic request/response models."""
