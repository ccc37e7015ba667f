import logging
import time
from functools import wraps
from typing import Any, Callable, TypeVar, cast

from prometheus_client import CollectorRegistry, Counter, Histogram, generate_latest

logger = logging.getLogger(__name__)

F = TypeVar('F', bound=Callable[..., Any])


class Monitoring:
    def __init__(self) -> None:
        """Initialize operation metrics on a private registry."""
        self.registry = CollectorRegistry()

        # Operation metrics
        self.operation_count = Counter(
            'operations_total',
            'Total number of operations',
            ['operation', 'status'],
            registry=self.registry,
        )

        self.operation_duration = Histogram(
            'operation_duration_seconds',
            'Operation duration in seconds',
            ['operation'],
            registry=self.registry,
        )

        # Verification metrics
        self.verification_cases = Counter(
            'verification_cases_total',
            'Total number of verification cases',
            ['suite', 'outcome'],
            registry=self.registry,
        )

    def track_operation(
        self, operation: str, duration: float, status: str = 'ok'
    ) -> None:
        """Track operation count and duration."""
        self.operation_count.labels(operation=operation, status=status).inc()
        self.operation_duration.labels(operation=operation).observe(duration)

    def track_cases(self, suite: str, passed: int, failed: int) -> None:
        """Track verification case outcomes."""
        self.verification_cases.labels(suite=suite, outcome='pass').inc(passed)
        self.verification_cases.labels(suite=suite, outcome='fail').inc(failed)

    def exposition(self) -> str:
        """Prometheus text exposition of every metric."""
        return generate_latest(self.registry).decode('utf-8')


def track_operation(operation_type: str) -> Callable[[F], F]:
    """Decorator for tracking operation duration and errors."""

    def decorator(func: F) -> F:
        @wraps(func)
        def wrapper(*args: Any, **kwargs: Any) -> Any:
            start_time = time.perf_counter()
            try:
                result = func(*args, **kwargs)
            except Exception:
                elapsed = time.perf_counter() - start_time
                monitoring.track_operation(operation_type, elapsed, 'error')
                raise
            duration = time.perf_counter() - start_time
            monitoring.track_operation(operation_type, duration)
            logger.debug(f"{operation_type} finished in {duration:.6f}s")
            return result

        return cast(F, wrapper)

    return decorator


# Initialize global monitoring instance
monitoring = Monitoring()
