"""Module for the ProgressLimitFilter class, which keeps long searches from flooding the logs."""
import time
import logging
from typing import Dict, Optional, TypedDict


class _StreamState:
    """Timer and suppressed-log counter of one progress stream."""

    __slots__ = ("deadline", "skipped")

    def __init__(self) -> None:
        # A deadline of 0 lets the first log of every stream through.
        self.deadline = 0.0
        self.skipped = 0

    def take_skipped(self) -> int:
        count, self.skipped = self.skipped, 0
        return count


class ProgressLimitFilter(logging.Filter):
    """Only let through one progress log per stream in each period of time.

    Point search and multiple derivation log a progress line per step. Steps can be very fast for small bounds and
    very slow for large ones, so instead of picking a fixed step interval we limit the rate per stream and append a
    note counting the suppressed lines to the next one shown.

    Records without a `stream_id` are left alone. Every record passing the filter gets a `progress_note` attribute,
    empty unless logs were suppressed before it.
    """

    def __init__(
        self,
        period_sec: float,
        summary: bool = True,
        summary_msg: str = " + skipped {numskip} progress logs",
        name: str = "",
    ):
        """Construct a logging filter that limits the rate of progress logs.

        Parameters
        ----------
        period_sec
            The minimum time (in seconds) between progress logs of the same stream. Zero disables limiting.
        summary
            Append the note counting suppressed logs to the message itself, not only to `progress_note`.
        summary_msg
            Format of the note, `numskip` and `stream_id` are available as fields.
        name
            Passed on to `logging.Filter`.
        """
        super().__init__(name)
        assert period_sec >= 0
        self._period_sec = period_sec
        self._summary = summary
        self._summary_msg = summary_msg
        self._states: Dict[str, _StreamState] = {}

    def _state(self, stream_id: str) -> _StreamState:
        return self._states.setdefault(stream_id, _StreamState())

    def should_trigger(self, stream_id: str, current_time: Optional[float] = None) -> bool:
        """Whether the period of a stream has run out."""
        now = time.time() if current_time is None else current_time
        return now >= self._state(stream_id).deadline

    def reset_trigger(
        self, stream_id: str, override_period_sec: Optional[float] = None, current_time: Optional[float] = None
    ) -> None:
        """Start a new period for a stream."""
        now = time.time() if current_time is None else current_time
        period = self._period_sec if override_period_sec is None else override_period_sec
        self._state(stream_id).deadline = now + period

    def trigger(
        self, stream_id: str, override_period_sec: Optional[float] = None, current_time: Optional[float] = None
    ) -> bool:
        """Start a new period for a stream if the previous one has run out, and report whether it had."""
        fired = self.should_trigger(stream_id, current_time)
        if fired:
            self.reset_trigger(stream_id, override_period_sec, current_time)
        return fired

    def skipped(self, stream_id: str) -> int:
        """Number of logs suppressed in a stream since the last one shown."""
        return self._state(stream_id).skipped

    def filter(self, record: logging.LogRecord) -> bool:
        """Decide whether a record is shown, appending the summary note when it is."""
        record.progress_note = ""
        stream_id: Optional[str] = getattr(record, "stream_id", None)
        if stream_id is None:
            return True

        state = self._state(stream_id)
        if not self.trigger(stream_id, getattr(record, "period_sec", None)):
            state.skipped += 1
            return False
        numskip = state.take_skipped()
        if numskip:
            record.progress_note = "\n" + self._summary_msg.format(numskip=numskip, stream_id=stream_id)
            if self._summary:
                record.msg = f"{record.msg}{record.progress_note}"
        return True


class Progress(TypedDict, total=False):
    """The logging `extra` of a progress log."""

    # Logs of one stream are limited together, independently of other streams.
    stream_id: Optional[str]
    # Period to start after this log instead of the filter's own.
    period_sec: float
