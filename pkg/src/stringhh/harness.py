"""Property verification and seeded fuzzing.

A property whose hypothesis holds for the presentation yields ``pass`` or
``fail``.  Outside its hypothesis (or for properties that are only
conjectured) the verdict is ``report-only`` and any violation is recorded
as a finding instead of a failure.
"""
from __future__ import annotations

import hashlib
import os
from collections.abc import Callable
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

from . import properties as props
from .generate import RandomSpec, random_presentation
from .presentation import ClassReport, Presentation, classify, emit_presentation

PASS, FAIL, REPORT_ONLY = "pass", "fail", "report-only"


@dataclass(frozen=True)
class Property:
    id: str
    check: Callable[[Presentation], props.Outcome]
    hypothesis: str
    applies: Callable[[ClassReport], bool]


def _always(_: ClassReport) -> bool:
    return True


def _never(_: ClassReport) -> bool:
    return False


def _s3(r: ClassReport) -> bool:
    return r.s3


def _gentle(r: ClassReport) -> bool:
    return r.gentle


PROPERTIES: dict[str, Property] = {
    p.id: p
    for p in (
        Property("complex-valid", props.check_complex_valid, "any quadratic monomial presentation", _always),
        Property("normalization", props.check_normalization, "S3", _s3),
        Property("cup-trivial", props.check_cup_trivial, "S3", _s3),
        Property("bracket-gentle-cochain", props.check_bracket_gentle_cochain, "gentle", _gentle),
        Property("bracket-gentle", props.check_bracket_gentle, "gentle", _gentle),
        Property("hh1-bracket", props.check_hh1_bracket, "any quadratic monomial presentation", _always),
        Property("descent", props.check_descent, "any quadratic monomial presentation", _always),
        Property("bracket-surjective", props.check_bracket_surjective, "unproven; report only", _never),
        Property("field-robust", props.check_field_robust, "unproven; report only", _never),
    )
}


class UnknownProperty(KeyError):
    def __init__(self, name: str):
        super().__init__(name)
        self.name = name

    def __str__(self) -> str:
        return f"unknown property {self.name!r}; known: {', '.join(PROPERTIES)}"


def get_property(name: str) -> Property:
    try:
        return PROPERTIES[name]
    except KeyError:
        raise UnknownProperty(name) from None


def digest(p: Presentation) -> str:
    return hashlib.sha256(emit_presentation(p).encode()).hexdigest()[:16]


@dataclass
class VerdictReport:
    property: str
    digest: str
    verdict: str
    hypothesis_holds: bool
    finding: bool = False  # report-only run that observed a violation
    witness: dict | None = None
    notes: list[str] = field(default_factory=list)
    seed: int | None = None
    replay: str | None = None

    @property
    def failed(self) -> bool:
        return self.verdict == FAIL

    def as_dict(self) -> dict:
        return {"format": 1, **asdict(self)}

    def lines(self) -> list[str]:
        out = [f"property: {self.property}", f"digest: {self.digest}", f"verdict: {self.verdict}"]
        if self.verdict == REPORT_ONLY:
            out.append(f"finding: {'yes' if self.finding else 'no'}")
        out += [f"note: {n}" for n in self.notes]
        if self.witness is not None:
            out.append(f"witness: {self.witness}")
        if self.seed is not None:
            out.append(f"seed: {self.seed}")
        if self.replay:
            out.append(f"replay: {self.replay}")
        return out


def verify(p: Presentation, property: str, seed: int | None = None, replay: str | None = None) -> VerdictReport:
    prop = get_property(property)
    holds = prop.applies(classify(p))
    outcome = prop.check(p)
    if holds:
        verdict = PASS if outcome.ok else FAIL
    else:
        verdict = REPORT_ONLY
    return VerdictReport(
        property=prop.id,
        digest=digest(p),
        verdict=verdict,
        hypothesis_holds=holds,
        finding=not holds and not outcome.ok,
        witness=None if outcome.ok else outcome.witness,
        notes=list(outcome.notes),
        seed=seed,
        replay=replay,
    )


@dataclass
class FuzzReport:
    property: str
    spec: dict
    count: int
    runs: list[dict]  # sorted by index
    counterexample: dict | None = None  # first hard failure
    first_finding: dict | None = None  # first report-only violation

    @property
    def tally(self) -> dict[str, int]:
        out = {PASS: 0, FAIL: 0, REPORT_ONLY: 0, "findings": 0}
        for r in self.runs:
            out[r["verdict"]] += 1
            out["findings"] += r["finding"]
        return out

    @property
    def ok(self) -> bool:
        return self.tally[FAIL] == 0

    def as_dict(self) -> dict:
        return {
            "format": 1,
            "property": self.property,
            "spec": self.spec,
            "count": self.count,
            "tally": self.tally,
            "runs": self.runs,
            "counterexample": self.counterexample,
            "first_finding": self.first_finding,
        }

    def lines(self) -> list[str]:
        t = self.tally
        out = [
            f"property: {self.property}",
            f"runs: {self.count}",
            f"pass: {t[PASS]}",
            f"fail: {t[FAIL]}",
            f"report-only: {t[REPORT_ONLY]}",
            f"findings: {t['findings']}",
        ]
        for key, item in (("counterexample", self.counterexample), ("first-finding", self.first_finding)):
            if item:
                out.append(f"{key}: index {item['index']} seed {item['seed']} digest {item['digest']}")
                if item.get("file"):
                    out.append(f"{key}-file: {item['file']}")
                out.append(f"{key}-replay: {item['replay']}")
        return out


def _run_one(spec: RandomSpec, property: str, index: int) -> tuple[dict, str]:
    child = spec.child(index)
    p = random_presentation(child)
    rep = verify(p, property, seed=child.seed)
    run = {
        "index": index,
        "seed": child.seed,
        "digest": rep.digest,
        "verdict": rep.verdict,
        "finding": rep.finding,
        "notes": rep.notes,
        "witness": rep.witness,
    }
    return run, emit_presentation(p)


def fuzz(
    spec: RandomSpec,
    property: str,
    count: int,
    jobs: int = 1,
    out_dir: str | None = None,
) -> FuzzReport:
    """Verify ``count`` seeded presentations derived from ``spec``.

    Child seeds depend only on (spec.seed, index), so the report is the same
    for any ``jobs``.  The first failure and the first report-only finding are
    written as DSL files into ``out_dir`` when it is given.
    """
    get_property(property)
    if count < 0:
        raise ValueError("count must be >= 0")
    indices = range(count)
    if jobs > 1 and count > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_one, [spec] * count, [property] * count, indices))
    else:
        results = [_run_one(spec, property, i) for i in indices]
    results.sort(key=lambda r: r[0]["index"])
    report = FuzzReport(property, asdict(spec), count, [r for r, _ in results])

    def emit(kind: str, run: dict, text: str) -> dict:
        item = {"index": run["index"], "seed": run["seed"], "digest": run["digest"], "witness": run["witness"], "dsl": text}
        if out_dir is not None:
            os.makedirs(out_dir, exist_ok=True)
            path = os.path.join(out_dir, f"{kind}-{property}-{run['index']}.dsl")
            with open(path, "w") as fh:
                fh.write(text)
            item["file"] = path
            item["replay"] = f"stringhh verify {path} --property {property}"
        else:
            name = f"{kind}-{property}-{run['index']}.dsl"
            item["file"] = None
            item["replay"] = (
                f"stringhh random {spec.child(run['index']).cli_args()} --emit {name}"
                f" && stringhh verify {name} --property {property}"
            )
        return item

    for run, text in results:
        if run["verdict"] == FAIL and report.counterexample is None:
            report.counterexample = emit("counterexample", run, text)
        if run["finding"] and report.first_finding is None:
            report.first_finding = emit("finding", run, text)
    return report
