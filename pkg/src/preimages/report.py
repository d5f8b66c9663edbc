"""Decision reports: the JSON surface of the command-line interface.

Reports are deterministic (sorted keys, no timestamps unless explicitly
requested) so identical invocations produce byte-identical output.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional

from .automaton import Automaton, StateSet, Word, apply_word, preimage_word

ANSWER_YES = "yes"
ANSWER_NO = "no"
ANSWER_UNKNOWN = "unknown-budget"

PROBLEMS = ("extend", "extend-total", "avoid", "resize")


@dataclass
class WitnessReport:
    problem: str
    answer: str
    subset_size: int
    method: Optional[str] = None            # poly | oracle | fast-path
    witness: Optional[str] = None
    witness_length: Optional[int] = None
    preimage_size: Optional[int] = None     # |S . w^-1| under the witness
    stats: dict = field(default_factory=dict)
    classification: dict = field(default_factory=dict)
    max_len: Optional[int] = None
    note: Optional[str] = None

    def to_dict(self) -> dict:
        d = {
            "problem": self.problem,
            "answer": self.answer,
            "subset_size": self.subset_size,
            "method": self.method,
            "witness": self.witness,
            "witness_length": self.witness_length,
            "preimage_size": self.preimage_size,
            "stats": dict(self.stats),
            "classification": dict(self.classification),
        }
        if self.max_len is not None:
            d["max_len"] = self.max_len
        if self.note is not None:
            d["note"] = self.note
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + "\n"


def validate_report(d: dict) -> None:
    """Structural schema check; raises ValueError on the first violation."""
    required = {
        "problem": str,
        "answer": str,
        "subset_size": int,
        "stats": dict,
        "classification": dict,
    }
    for key, typ in required.items():
        if key not in d:
            raise ValueError(f"report missing key {key!r}")
        if not isinstance(d[key], typ):
            raise ValueError(f"report key {key!r} must be {typ.__name__}")
    if d["answer"] not in (ANSWER_YES, ANSWER_NO, ANSWER_UNKNOWN):
        raise ValueError(f"bad answer value {d['answer']!r}")
    for key, typ in (("method", str), ("witness", str), ("witness_length", int),
                     ("preimage_size", int), ("max_len", int), ("note", str)):
        if d.get(key) is not None and not isinstance(d[key], typ):
            raise ValueError(f"report key {key!r} must be {typ.__name__} or null")
    if (d.get("witness") is None) != (d.get("witness_length") is None):
        raise ValueError("witness and witness_length must be present together")


def witness_holds(aut: Automaton, s: StateSet, problem: str, w: Word) -> bool:
    """Re-verify a claimed witness by direct computation."""
    if problem == "extend":
        return preimage_word(aut, s, w).size > s.size
    if problem == "extend-total":
        return preimage_word(aut, s, w).size == aut.n
    if problem == "avoid":
        image = apply_word(aut, StateSet.full(aut.n), w)
        return (image.bits & s.bits) == 0
    if problem == "resize":
        return preimage_word(aut, s, w).size != s.size
    raise ValueError(f"unknown problem {problem!r}")
