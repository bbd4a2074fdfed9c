"""
Command-line front end: ``surgtorsion <verb> [options]``.

Exit codes: 0 success, 1 input parse error, 2 hypothesis violation,
3 internal inconsistency (an oracle cross-check failed).
"""
import argparse
import logging
import os
import sys
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from . import __version__
from .exceptions import HypothesisError, InconsistencyError, InputParseError, RecordEncodingError, TorsionError
from .record_loader import FIXTURES
from .storage import ScalarCodec
from .surgery import ManifoldInvariantSet
from .surgtorsion import SurgeryTorsion

logger = logging.getLogger(__name__)

VERBS = ("torsion", "homs", "surgery", "seifert", "obstruct")

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_HYPOTHESIS = 2
EXIT_INCONSISTENT = 3

_FLAGS = {"knot": "--knot", "groups": "--group", "reps": "--rep", "slope": "--slope", "params": "--params"}


@dataclass
class JobSpec:
    """One CLI invocation."""
    verb: str
    knot: Optional[str] = None
    groups: List[str] = field(default_factory=list)
    reps: List[str] = field(default_factory=list)
    slope: Optional[str] = None
    params: Optional[str] = None
    char: Optional[Tuple[int, ...]] = None
    bounds: int = 16
    candidates: List[str] = field(default_factory=list)
    output: Optional[str] = None
    check: bool = False
    verbose: bool = False

    def validate(self) -> None:
        """
        Raises:
            InputParseError: If a field required by the verb is missing.
        """
        if self.verb not in VERBS:
            raise InputParseError(f"Unknown verb {self.verb!r}")
        required = {
            "torsion": ("knot",),
            "homs": ("knot", "groups"),
            "surgery": ("knot", "slope", "groups", "reps"),
            "seifert": ("params", "groups", "reps"),
            "obstruct": ("knot", "slope", "groups"),
        }[self.verb]
        missing = [_FLAGS[name] for name in required if not getattr(self, name)]
        if missing:
            raise InputParseError(f"{self.verb} needs {', '.join(missing)}")
        if self.bounds < 2:
            raise InputParseError(f"--bounds must be at least 2, got {self.bounds}")


def fixtures() -> Dict[str, str]:
    """Bundled inputs by file name."""
    return {name: os.path.join(FIXTURES, name) for name in sorted(os.listdir(FIXTURES))}


def _invariant_record(codec: ScalarCodec, invariant: ManifoldInvariantSet) -> Dict:
    return {
        "values": [codec.encode_value(v) for v in invariant.values],
        "provenance": {str(v): sorted(invariant.provenance[v]) for v in invariant.values},
        "violations": list(invariant.violations),
        "warnings": list(invariant.warnings),
    }


def _torsion(engine: SurgeryTorsion, spec: JobSpec) -> Tuple[int, Dict]:
    group = spec.groups[0] if spec.groups else None
    rep = spec.reps[0] if spec.reps else "trivial-1"
    marked = engine.knot(spec.knot)
    result = engine.torsion(marked, group, rep, verify=spec.check)
    codec = engine.storage
    record = {"knot": marked.name, "group": group or "trivial", "rep": rep}
    if not isinstance(result, dict):
        record["torsion"] = codec.encode_value(result)
        return EXIT_OK, record
    g = engine.group(group)
    record["classes"] = [
        {
            "peripheral": [g.format_idx(key[0]), g.format_idx(key[1])],
            "values": [codec.encode_value(v) for v in invariant.values],
            "homs": [h.describe() for h in invariant.provenance] if spec.verbose else len(invariant.provenance),
        }
        for key, invariant in result.items()
    ]
    return EXIT_OK, record


def _homs(engine: SurgeryTorsion, spec: JobSpec) -> Tuple[int, Dict]:
    marked = engine.knot(spec.knot)
    record = {"knot": marked.name, "slope": spec.slope, "groups": {}}
    for name in spec.groups:
        classes = engine.homs(marked, name, spec.slope)
        record["groups"][name] = {"count": len(classes), "classes": [h.describe() for h in classes]}
    return EXIT_OK, record


def _surgery(engine: SurgeryTorsion, spec: JobSpec) -> Tuple[int, Dict]:
    marked = engine.knot(spec.knot)
    a = spec.char[0] if spec.char else 1
    invariant = engine.surgery(marked, spec.slope, spec.groups[0], spec.reps[0], a)
    record = {"knot": marked.name, "slope": str(engine.slope(spec.slope)), "group": spec.groups[0],
              "rep": spec.reps[0], "character": a}
    record.update(_invariant_record(engine.storage, invariant))
    return (EXIT_HYPOTHESIS if invariant.violations else EXIT_OK), record


def _seifert(engine: SurgeryTorsion, spec: JobSpec) -> Tuple[int, Dict]:
    params = engine.params(spec.params)
    sets = engine.seifert(params, spec.groups[0], spec.reps[0], spec.char, verify=spec.check)
    record = {"params": str(params), "homology_order": params.homology_order(), "group": spec.groups[0],
              "rep": spec.reps[0], "characters": []}
    status = EXIT_OK
    for chi, invariant in sorted(sets.items(), key=lambda item: (item[0].a, item[0].b)):
        entry = {"a": chi.a, "b": list(chi.b)}
        entry.update(_invariant_record(engine.storage, invariant))
        record["characters"].append(entry)
        if invariant.violations:
            status = EXIT_HYPOTHESIS
    return status, record


def _obstruct(engine: SurgeryTorsion, spec: JobSpec) -> Tuple[int, Dict]:
    reps = spec.reps or None
    if reps is not None and len(reps) == 1 and len(spec.groups) > 1:
        reps = reps * len(spec.groups)
    report = engine.obstruct(spec.knot, spec.slope, spec.groups, reps, spec.bounds,
                             candidates=spec.candidates or None)
    codec = engine.storage
    record = {
        "knot": report.knot,
        "slope": str(report.slope),
        "bounds": spec.bounds,
        "knot_side": [{"group": s.group, "count": s.count, "values": [codec.encode_value(v) for v in s.values],
                       "characters": {c.label: [str(v) for v in c.values] for c in s.characters},
                       "violations": list(s.violations)} for s in report.knot_sides],
        "candidates": report.as_records(),
        "obstructed": report.obstructed,
    }
    if not spec.output:
        print(report.table(), file=sys.stderr)
    return EXIT_OK, record


_HANDLERS = {"torsion": _torsion, "homs": _homs, "surgery": _surgery, "seifert": _seifert, "obstruct": _obstruct}


def run(spec: JobSpec, engine: Optional[SurgeryTorsion] = None) -> Tuple[int, Optional[Dict]]:
    """
    Executes a job and writes its JSON record to ``spec.output`` (stdout when unset).

    Returns:
        Tuple of the exit status and the record (None when the job failed before producing one).
    """
    try:
        spec.validate()
        engine = engine or SurgeryTorsion()
        status, record = _HANDLERS[spec.verb](engine, spec)
        text = engine.storage.encode_record(record)
    except (InputParseError, RecordEncodingError) as e:
        logger.error("%s", e)
        return EXIT_PARSE, None
    except HypothesisError as e:
        logger.error("Hypothesis violated: %s", e)
        return EXIT_HYPOTHESIS, None
    except (InconsistencyError, TorsionError) as e:
        logger.error("Internal inconsistency: %s", e)
        return EXIT_INCONSISTENT, None
    if spec.output:
        try:
            with open(spec.output, 'w', encoding='utf-8') as f:
                f.write(text)
        except IOError as e:
            logger.error("Failed to write %s: %s", spec.output, e)
            return EXIT_PARSE, record
    else:
        sys.stdout.write(text)
    return status, record


def _parse_char(text: Optional[str]) -> Optional[Tuple[int, ...]]:
    if text is None:
        return None
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise InputParseError(f"Malformed character exponents {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="surgtorsion",
                                     description="Twisted torsion of knots, Dehn surgeries and Seifert fibered spaces.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("verb", choices=VERBS + ("fixtures",))
    parser.add_argument("--knot", help="knot file (JSON with 'pd' or 'presentation') or bundled fixture name")
    parser.add_argument("--group", action="append", default=[], help="group name (A4, A5, ...) or group file")
    parser.add_argument("--rep", action="append", default=[], help="A5-standard, standard, trivial-<n> or a JSON file")
    parser.add_argument("--slope", help="surgery slope p/q")
    parser.add_argument("--params", help="Seifert parameters such as 3/2,-3,-5, or a params file")
    parser.add_argument("--char", help="character exponents a[,b1,...]")
    parser.add_argument("--bounds", type=int, default=16, help="upper bound on p_i in the obstruction search")
    parser.add_argument("--candidate", action="append", default=[], help="explicit Seifert candidate for obstruct")
    parser.add_argument("--json", dest="output", help="write the JSON record to this file")
    parser.add_argument("--check", action="store_true", help="cross-check values against chain complex oracles")
    parser.add_argument("--mirror", action="store_true", help="reverse the longitude of the knot")
    parser.add_argument("--cache-dir", help="directory for cached homomorphism enumerations")
    parser.add_argument("--verbose", action="store_true", help="debug logging and per-class provenance")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    if args.verb == "fixtures":
        for name, path in fixtures().items():
            print(f"{name}\t{path}")
        return EXIT_OK
    try:
        spec = JobSpec(args.verb, args.knot, args.group, args.rep, args.slope, args.params,
                       _parse_char(args.char), args.bounds, args.candidate, args.output, args.check, args.verbose)
        engine = SurgeryTorsion(cache_dir=args.cache_dir, mirror=args.mirror)
    except InputParseError as e:
        logger.error("%s", e)
        return EXIT_PARSE
    status, _ = run(spec, engine)
    return status


if __name__ == "__main__":
    sys.exit(main())
