"""Tracing and metrics for long-running computations (searches, enumerations)."""

import logging
import time
from datetime import datetime, timezone
from typing import Any, Dict, List, Optional

from cubic_composition.core.types import MetricStats, MetricStatsMap

logger = logging.getLogger(__name__)

_LEVELS = {
    "debug": logging.DEBUG,
    "info": logging.INFO,
    "warning": logging.WARNING,
    "error": logging.ERROR,
}


def _now() -> str:
    return datetime.now(timezone.utc).isoformat()


class ComputationObserver:
    """Records traces, log entries and numeric metrics of a computation.

    Library functions take an optional observer; passing one collects
    ``search.explored``, ``search.depth``, ``enumeration.candidates``,
    ``enumeration.classes`` and timing metrics without changing results.
    """

    def __init__(self):
        """Initialize the ComputationObserver."""
        self._traces: List[Dict[str, Any]] = []
        self._logs: List[Dict[str, Any]] = []
        self._metrics: Dict[str, List[float]] = {}
        self._started: Dict[str, float] = {}

    def start_trace(
        self,
        trace_id: str,
        operation: str,
        metadata: Optional[Dict[str, Any]] = None,
    ) -> Dict[str, Any]:
        """Start a new trace.

        Args:
            trace_id: Unique identifier for the trace
            operation: Operation being traced (e.g. "equivalent", "enumerate_classes")
            metadata: Optional metadata such as the discriminant or the bound

        Returns:
            Trace object
        """
        trace = {
            "trace_id": trace_id,
            "operation": operation,
            "start_time": _now(),
            "metadata": metadata or {},
            "events": [],
            "status": "active",
        }
        self._traces.append(trace)
        self._started[trace_id] = time.perf_counter()
        return trace

    def end_trace(
        self,
        trace_id: str,
        status: str = "completed",
        result: Optional[Any] = None,
    ) -> None:
        """End a trace and record its duration as ``<operation>.seconds``."""
        for trace in self._traces:
            if trace["trace_id"] == trace_id:
                trace["end_time"] = _now()
                trace["status"] = status
                trace["result"] = result
                started = self._started.pop(trace_id, None)
                if started is not None:
                    elapsed = time.perf_counter() - started
                    trace["seconds"] = elapsed
                    self.record_metric(f"{trace['operation']}.seconds", elapsed)
                break

    def log_event(
        self,
        trace_id: str,
        event_type: str,
        description: str,
        metadata: Optional[Dict[str, Any]] = None,
    ) -> None:
        event = {
            "event_type": event_type,
            "description": description,
            "timestamp": _now(),
            "metadata": metadata or {},
        }
        for trace in self._traces:
            if trace["trace_id"] == trace_id:
                trace["events"].append(event)
                break

    def log(
        self,
        level: str,
        message: str,
        metadata: Optional[Dict[str, Any]] = None,
    ) -> None:
        """Keep a log entry and forward it to the module logger.

        Args:
            level: Log level (debug, info, warning, error)
            message: Log message
            metadata: Optional metadata
        """
        self._logs.append(
            {
                "level": level,
                "message": message,
                "timestamp": _now(),
                "metadata": metadata or {},
            }
        )
        logger.log(_LEVELS.get(level, logging.INFO), message)

    def record_metric(self, metric_name: str, value: float) -> None:
        self._metrics.setdefault(metric_name, []).append(value)

    def get_traces(
        self,
        operation: Optional[str] = None,
        status: Optional[str] = None,
        limit: Optional[int] = None,
    ) -> List[Dict[str, Any]]:
        traces = self._traces
        if operation:
            traces = [t for t in traces if t["operation"] == operation]
        if status:
            traces = [t for t in traces if t["status"] == status]
        if limit:
            traces = traces[-limit:]
        return traces

    def get_logs(
        self, level: Optional[str] = None, limit: Optional[int] = None
    ) -> List[Dict[str, Any]]:
        logs = self._logs
        if level:
            logs = [entry for entry in logs if entry["level"] == level]
        if limit:
            logs = logs[-limit:]
        return logs

    def get_metric_stats(self, metric_name: str) -> Optional[MetricStats]:
        """Get count/min/max/avg for a metric, or None if nothing was recorded."""
        values = self._metrics.get(metric_name)
        if not values:
            return None
        return {
            "count": len(values),
            "min": min(values),
            "max": max(values),
            "avg": sum(values) / len(values),
        }

    def all_metric_stats(self) -> MetricStatsMap:
        stats: MetricStatsMap = {}
        for name in sorted(self._metrics):
            summary = self.get_metric_stats(name)
            if summary is not None:
                stats[name] = summary
        return stats


__all__ = ["ComputationObserver"]
