from services.pipeline_service import PipelineService
from services.reproduce_service import ReproduceService
from services.search_service import SearchService

__all__ = ["PipelineService", "ReproduceService", "SearchService"]
