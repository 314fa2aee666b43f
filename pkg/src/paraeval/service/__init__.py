"""FastAPI service wrapping the evaluation library."""
