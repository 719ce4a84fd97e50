"""Independent brute-force oracles the implementation is checked against."""


class ServingLog:
    """Replay oracle for the sliding-window counts.

    Keeps every serving ever made and recounts the window from scratch, so
    it shares no code with the incremental implementation.
    """

    def __init__(self, window_days: int):
        self.window_days = window_days
        self.day = 0
        self.log: list[tuple[int, object]] = []  # (day, entry_id or "surprise")

    def serve_entry(self, entry_id: int) -> None:
        self.log.append((self.day, entry_id))

    def serve_surprise(self) -> None:
        self.log.append((self.day, "surprise"))

    def advance(self) -> None:
        self.day += 1

    def recount(self, n_entries: int) -> list[int]:
        counts = [0] * n_entries
        for day, served in self.log:
            if day > self.day - self.window_days and served != "surprise":
                counts[served] += 1
        return counts

    def argmin_set(self, n_entries: int) -> set[int]:
        counts = self.recount(n_entries)
        low = min(counts)
        return {i for i, c in enumerate(counts) if c == low}


def cooccurrence_prob(j: int, l: int, item_sets: list[set[int]]):
    """Count-based conditional probability oracle over plain python sets."""
    with_l = [s for s in item_sets if l in s]
    if not with_l:
        return None
    return sum(1 for s in with_l if j in s) / len(with_l)
