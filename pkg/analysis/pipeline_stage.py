from contextlib import contextmanager

from exceptions import DistortedFourierError, PipelineError


@contextmanager
def pipeline_stage(stage: str):
    """Re-raises toolkit errors inside the block as PipelineError(stage); PipelineErrors pass through untouched."""
    try:
        yield
    except PipelineError:
        raise
    except DistortedFourierError as e:
        raise PipelineError(stage, e) from e
