import functools
import signal
from types import FrameType
from typing import Any, Callable, Optional, TypeVar, cast

F = TypeVar('F', bound=Callable[..., Any])


def timeout(seconds: int = 60) -> Callable[[F], F]:
    """Abort the wrapped call with TimeoutError after `seconds`; 0 disables.

    Relies on SIGALRM, so it is a no-op on platforms without it.
    """

    def decorator(func: F) -> F:
        @functools.wraps(func)
        def wrapper(*args: Any, **kwargs: Any) -> Any:
            if seconds <= 0 or not hasattr(signal, 'SIGALRM'):
                return func(*args, **kwargs)

            def handler(signum: int, frame: Optional[FrameType]) -> None:
                raise TimeoutError(
                    f"Function {func.__name__} timed out after {seconds} seconds"
                )

            # Set the timeout
            previous = signal.signal(signal.SIGALRM, handler)
            signal.alarm(seconds)

            try:
                result = func(*args, **kwargs)
            finally:
                # Disable the alarm
                signal.alarm(0)
                signal.signal(signal.SIGALRM, previous)
            return result

        return cast(F, wrapper)

    return decorator
