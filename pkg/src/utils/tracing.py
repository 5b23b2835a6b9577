"""
OpenTelemetry tracing with an in-memory exporter.

The suite runner reads captured spans to report which solvers a case
exercised; the CLI turns tracing on when DLGAMES_TRACE=1.

Usage:
    from utils.tracing import setup_tracing, get_span_capture, span

    setup_tracing()  # call once at startup

    with span("stratified_bisim", logic="{I}") as s:
        ...
        s.set_attribute("iterations", 3)

    spans = get_span_capture().get_finished_spans()
"""
import logging
import os
from contextlib import contextmanager
from typing import Optional

logger = logging.getLogger(__name__)

TRACER_NAME = "dl-bisim-games"

# Module-level singleton
_span_capture = None
_tracer = None


def tracing_requested() -> bool:
    return os.getenv("DLGAMES_TRACE", "").strip() in {"1", "true", "yes"}


def setup_tracing() -> bool:
    """Configure an SDK tracer provider that records spans in memory.

    Returns True if tracing was initialized.
    """
    global _span_capture, _tracer
    if _span_capture is not None:
        return True

    try:
        from opentelemetry import trace
        from opentelemetry.sdk.trace import TracerProvider
        from opentelemetry.sdk.trace.export import SimpleSpanProcessor
        from opentelemetry.sdk.trace.export.in_memory_span_exporter import InMemorySpanExporter

        _span_capture = InMemorySpanExporter()
        provider = TracerProvider()
        provider.add_span_processor(SimpleSpanProcessor(_span_capture))
        trace.set_tracer_provider(provider)
        _tracer = provider.get_tracer(TRACER_NAME)
        logger.info("Tracing initialized: in-memory span capture")
        return True

    except ImportError as e:
        logger.warning("OpenTelemetry not installed, tracing disabled: %s", e)
        return False
    except Exception as e:
        logger.warning("Tracing setup failed: %s", e)
        return False


def get_span_capture():
    """Return the in-memory span exporter, or None when tracing is off."""
    return _span_capture


def get_tracer():
    """Return the configured tracer, or None when tracing is off."""
    return _tracer


class _NullSpan:
    def set_attribute(self, key, value):
        pass


@contextmanager
def span(name: str, **attributes):
    """Open a span when tracing is configured; otherwise yield a no-op span."""
    tracer = get_tracer()
    if tracer is None:
        yield _NullSpan()
        return
    with tracer.start_as_current_span(name) as current:
        for key, value in attributes.items():
            current.set_attribute(key, _attribute_value(value))
        yield current


def _attribute_value(value) -> Optional[object]:
    if isinstance(value, (bool, int, float, str)):
        return value
    return str(value)
