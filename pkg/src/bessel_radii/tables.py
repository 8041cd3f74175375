"""Parameter grids and published values of the six radius tables.

Every table uses the same nine coefficient triples (three sweeps of one
coefficient) and two orders beta in {0, 0.5}. Published entries are kept
exactly as printed, four decimals.
"""

from __future__ import annotations

from dataclasses import dataclass

BETAS = (0.0, 0.5)

# (label, varied coefficient, triples)
SWEEPS = (
    ("b=1, c=0", "a", ((2, 1, 0), (3, 1, 0), (4, 1, 0))),
    ("a=1, c=0", "b", ((1, 2, 0), (1, 3, 0), (1, 4, 0))),
    ("a=1, b=2", "c", ((1, 2, 2), (1, 2, 3), (1, 2, 4))),
)


@dataclass(frozen=True)
class TableSpec:
    number: int
    normalization: str
    kind: str
    nu: float
    # printed[(a, b, c)] = (value at beta=0, value at beta=0.5)
    printed: dict
    suspect: bool = False

    @property
    def title(self) -> str:
        what = "starlikeness" if self.kind == "starlike" else "convexity"
        return f"Table {self.number}: radii of {what} for {self.normalization}_nu, nu = {self.nu}"

    def cells(self):
        """(triple, beta, printed value) in fixed grid order."""
        for _, _, triples in SWEEPS:
            for triple in triples:
                for beta, value in zip(BETAS, self.printed[triple]):
                    yield triple, beta, value


def _printed(rows) -> dict:
    triples = [t for _, _, ts in SWEEPS for t in ts]
    return dict(zip(triples, rows))


TABLES = {
    1: TableSpec(1, "f", "starlike", 1.5, _printed([
        (0.8231, 0.6458), (0.7689, 0.6045), (0.7382, 0.5809),
        (1.0917, 0.8481), (1.1774, 0.9120), (1.2337, 0.9539),
        (1.3089, 1.0058), (1.3952, 1.0671), (1.4708, 1.1203)])),
    2: TableSpec(2, "g", "starlike", 1.5, _printed([
        (0.7188, 0.5483), (0.6723, 0.5137), (0.6458, 0.4939),
        (0.9477, 0.7167), (1.0203, 0.7697), (1.0678, 0.8044),
        (1.1285, 0.8459), (1.1995, 0.8957), (1.2611, 0.9388)])),
    3: TableSpec(3, "h", "starlike", 1.5, _printed([
        (0.8009, 0.5167), (0.6979, 0.4520), (0.6426, 0.4171),
        (1.4211, 0.8982), (1.6575, 1.0410), (1.8225, 1.1403),
        (2.0638, 1.2737), (2.3560, 1.4388), (2.6296, 1.5905)])),
    4: TableSpec(4, "f", "convex", 2.5, _printed([
        (1.0057, 0.7896), (0.9810, 0.7709), (0.9676, 0.7607),
        (1.1515, 0.8992), (1.2069, 0.9408), (1.2460, 0.9702),
        (1.2412, 0.9653), (1.2800, 0.9938), (1.3155, 1.0197)])),
    5: TableSpec(5, "g", "convex", 2.5, _printed([
        (0.6839, 0.5219), (0.6680, 0.5101), (0.6594, 0.5036),
        (0.7769, 0.5913), (0.8122, 0.6176), (0.8371, 0.6361),
        (0.8325, 0.6323), (0.8563, 0.6498), (0.8780, 0.6658)])),
    6: TableSpec(6, "h", "convex", 2.5, _printed([
        (1.4835, 1.0997), (1.4080, 1.0453), (1.3681, 1.0165),
        (1.9725, 1.4489), (2.1779, 1.5946), (2.3289, 1.7016),
        (2.3191, 1.6906), (2.4797, 1.8014), (2.6322, 1.9060)]), suspect=True),
}

TABLE6_WARNING = (
    "WARNING: the published convexity radii for h_nu at nu = 2.5 do not satisfy "
    "their own defining equation; the values below are direct roots of "
    "1 + x h''(x)/h'(x) = beta and will not match the published table "
    "(published a=2, beta=0: 1.4835; computed: 1.1386)"
)


def table_warnings(normalization: str, kind: str) -> list[str]:
    """Warnings attached to every result of a suspect problem type."""
    return [TABLE6_WARNING] if (normalization, kind) == ("h", "convex") else []
