import os

OVERRIDE_ENV = "HBF_GUARD_OVERRIDE"


class GuardError(RuntimeError):
    """A desk-scale cost guard was exceeded."""


def guard_lifted(override: bool = False) -> bool:
    return override or os.environ.get(OVERRIDE_ENV, "") == "1"


def check_guard(ok: bool, message: str, override: bool = False) -> None:
    if not ok and not guard_lifted(override):
        raise GuardError(f"{message} (set {OVERRIDE_ENV}=1 to lift)")
