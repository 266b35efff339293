import mpmath
from hypothesis import HealthCheck, settings

mpmath.mp.dps = 40

settings.register_profile(
    "zetatrace",
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("zetatrace")
