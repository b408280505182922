"""Machine-readable output: exact rationals as "num/den" in CSV or JSON."""

import csv
import io
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

KINDS = ("d", "dedekind", "rademacher", "sigma", "casson_walker", "d_surgery")
CSV_FIELDS = ("p", "q", "n", "value", "kind")


def format_rational(x: Fraction) -> str:
    """Lowest-terms "num/den" with positive denominator; zero is "0/1"."""
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Fraction:
    """Inverse of :func:`format_rational`; rejects anything not in canonical form."""
    num, sep, den = text.partition("/")
    if not sep:
        raise ValueError(f"expected num/den, got {text!r}")
    value = Fraction(int(num), int(den))
    if format_rational(value) != text:
        raise ValueError(f"{text!r} is not a reduced fraction with positive denominator")
    return value


@dataclass(frozen=True)
class OutputRecord:
    p: int
    q: int
    n: Optional[int]
    value: Fraction
    kind: str

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown kind {self.kind!r}")

    def as_dict(self) -> dict:
        out = {"p": self.p, "q": self.q}
        if self.n is not None:
            out["n"] = self.n
        out["value"] = format_rational(self.value)
        out["kind"] = self.kind
        return out

    @classmethod
    def from_dict(cls, data: dict) -> "OutputRecord":
        n = data.get("n")
        return cls(
            int(data["p"]),
            int(data["q"]),
            None if n in (None, "") else int(n),
            parse_rational(data["value"]),
            data["kind"],
        )


def to_csv(records: Iterable[OutputRecord]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_FIELDS, lineterminator="\n")
    writer.writeheader()
    for rec in records:
        row = rec.as_dict()
        row.setdefault("n", "")
        writer.writerow(row)
    return buf.getvalue()


def to_json(records: Iterable[OutputRecord]) -> str:
    return json.dumps([rec.as_dict() for rec in records], ensure_ascii=False) + "\n"


def read_csv(text: str) -> list[OutputRecord]:
    return [OutputRecord.from_dict(row) for row in csv.DictReader(io.StringIO(text))]


def read_json(text: str) -> list[OutputRecord]:
    return [OutputRecord.from_dict(obj) for obj in json.loads(text)]


def render(records: Iterable[OutputRecord], fmt: str) -> str:
    return to_json(records) if fmt == "json" else to_csv(records)
