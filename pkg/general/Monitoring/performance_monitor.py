"""
Monitoring - Performance Monitor
================================

Tracks wall time and process resources of a kpztail run. The validate
command wraps each check in a stage so its report carries per-check
timings and the peak resident memory.
"""

import time
from collections import defaultdict, deque
from datetime import datetime, timezone
from typing import Dict, Any, List, Optional

import psutil

from general.Logging.logger_manager import get_logger

logger = get_logger(__name__)


class PerformanceMonitor:
    """
    Performance Monitor

    Samples process metrics on demand and records named stages.
    """

    def __init__(self, max_metrics_per_type: int = 1000):
        self.metrics = defaultdict(deque)
        self.stage_stats: Dict[str, Dict[str, Any]] = defaultdict(dict)
        self.is_running = False
        self.start_time: Optional[float] = None
        self.started_at: Optional[datetime] = None
        self.max_metrics_per_type = max_metrics_per_type
        self._process = psutil.Process()

    def start(self):
        self.is_running = True
        self.start_time = time.perf_counter()
        self.started_at = datetime.now(timezone.utc)
        self.collect_process_metrics()
        logger.debug("performance_monitor_started")

    def stop(self):
        self.collect_process_metrics()
        self.is_running = False
        logger.debug("performance_monitor_stopped", summary=self.get_system_summary())

    def collect_process_metrics(self):
        """Record CPU and memory of this process."""
        timestamp = time.perf_counter()
        try:
            memory = self._process.memory_info()
            self._add_metric('process_memory_mb', memory.rss / (1024 ** 2), timestamp)
            self._add_metric('process_cpu_seconds', sum(self._process.cpu_times()[:2]), timestamp)
            self._add_metric('system_memory_percent', psutil.virtual_memory().percent, timestamp)
        except psutil.Error as e:
            logger.warning("metric_collection_failed", error=str(e))

    def _add_metric(self, metric_name: str, value: float, timestamp: float):
        metric_queue = self.metrics[metric_name]
        metric_queue.append({'value': value, 'timestamp': timestamp})
        while len(metric_queue) > self.max_metrics_per_type:
            metric_queue.popleft()

    def track_stage_start(self, stage_name: str):
        self.stage_stats[stage_name]['start'] = time.perf_counter()
        self.stage_stats[stage_name]['status'] = 'running'

    def track_stage_stop(self, stage_name: str, status: str = 'done'):
        stats = self.stage_stats[stage_name]
        start = stats.get('start')
        if start is not None:
            stats['seconds'] = time.perf_counter() - start
        stats['status'] = status
        self.collect_process_metrics()
        logger.debug("stage_finished", stage=stage_name, seconds=stats.get('seconds'), status=status)

    def get_current_metrics(self) -> Dict[str, Any]:
        return {name: queue[-1]['value'] for name, queue in self.metrics.items() if queue}

    def get_metric_history(self, metric_name: str) -> List[Dict]:
        return list(self.metrics.get(metric_name, []))

    def peak(self, metric_name: str) -> Optional[float]:
        history = self.metrics.get(metric_name)
        if not history:
            return None
        return max(item['value'] for item in history)

    def get_stage_stats(self) -> Dict[str, Any]:
        return {name: {k: v for k, v in stats.items() if k != 'start'}
                for name, stats in self.stage_stats.items()}

    def get_system_summary(self) -> Dict[str, Any]:
        """Summary of the run so far."""
        elapsed = time.perf_counter() - self.start_time if self.start_time is not None else None
        return {
            'started_at': self.started_at.isoformat() if self.started_at else None,
            'elapsed_seconds': elapsed,
            'status': 'running' if self.is_running else 'stopped',
            'peak_memory_mb': self.peak('process_memory_mb'),
            'stage_count': len(self.stage_stats),
            'metrics_collected': sum(len(queue) for queue in self.metrics.values()),
        }
