"""Lab metrics registry."""

from prometheus_client import Counter, Gauge, generate_latest

from ..utils.resources import peak_rss_bytes


class LabMetrics:
    """Counters describing the work done by the lab in this process.

    Digit sources, the certification loop and the cache report here; the
    HTTP surface exposes the registry in Prometheus text format.
    """

    def __init__(self) -> None:
        """Register all Prometheus metrics."""
        self._register_metrics()

    def _register_metrics(self) -> None:
        self.digits_certified = Counter(
            "dclab_digits_certified",
            "Digits emitted with a certified value",
            ["source"],
        )
        self.precision_escalations = Counter(
            "dclab_precision_escalations",
            "Times a comparison doubled its working precision",
        )
        self.certification_failures = Counter(
            "dclab_certification_failures",
            "Inequalities that failed to certify",
            ["check"],
        )
        self.cache_operations = Counter(
            "dclab_cache_operations",
            "Digit cache reads and writes",
            ["operation"],
        )
        self.bound_evaluations = Counter(
            "dclab_bound_evaluations",
            "Explicit bound formulas evaluated",
            ["formula"],
        )
        self.resident_memory = Gauge(
            "dclab_resident_memory_bytes",
            "Resident set size of the lab process in bytes",
        )

    def get_prometheus_metrics(self) -> bytes:
        """Refresh the memory gauge and return the text exposition.

        Returns:
            bytes: Prometheus formatted metrics.
        """
        self.resident_memory.set(peak_rss_bytes())
        return generate_latest()
