"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 verification mismatch, 3 internal
assertion failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Sequence

from . import cache
from . import combinatorics as cb
from .canonical import canonical_block, multipartition_blocks
from .combinatorics import ChargedMultipartition, Partition
from .fock import FockVector, TruncationError, chevalley_action
from .involution import bar_fock, bar_matrix_block
from .laurent import LaurentPoly
from .wedge import StraighteningError, normal_form, vector_to_json

EXIT_OK, EXIT_USAGE, EXIT_MISMATCH, EXIT_INTERNAL = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


# --- parsing ------------------------------------------------------------------------------


def parse_ints(text: str) -> tuple[int, ...]:
    text = text.strip()
    if text in ("", "-", "0", "()", "∅"):
        return ()
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"not a comma-separated integer list: {text!r}") from None


def parse_partition(text: str) -> Partition:
    try:
        return cb.check_partition(parse_ints(text))
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def parse_multipartition(text: str) -> tuple[Partition, ...]:
    """``"2,1|1"`` is ``((2,1),(1))``; an empty field is the empty partition."""
    return tuple(parse_partition(p) for p in text.split("|"))


def parse_charges(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"bad charge vector {text!r}") from None


@dataclass
class JobSpec:
    command: str
    n: int = 2
    l: int = 2
    charges: tuple[int, ...] = (0,)
    size: int = 0
    sign: str = "plus"
    fmt: str = "json"
    side: str = "l"
    cache_dir: str | None = None
    extra: dict = field(default_factory=dict)

    def validate(self) -> None:
        if self.n < 2 or self.l < 2:
            raise UsageError("n and l must be at least 2")
        if len(self.charges) not in (1, self.l, self.n):
            raise UsageError(f"charge vector must have length 1, l={self.l} or n={self.n}")
        if self.size < 0:
            raise UsageError("size must be non-negative")

    @property
    def s(self) -> int:
        return sum(self.charges)

    @property
    def label_side(self) -> str | None:
        """``None`` for a bare charge; otherwise the labeling the vector refers to."""
        c = len(self.charges)
        if c == 1:
            return None
        if self.n == self.l:
            return self.side
        return "l" if c == self.l else "n"


# --- matrix emitters ----------------------------------------------------------------------


@dataclass
class Block:
    n: int
    l: int
    s: int
    d: int
    charges: tuple[int, ...] | None
    side: str
    labels: list[Partition]
    get: Callable[[Partition, Partition], LaurentPoly]

    def multilabel(self, lam: Partition) -> ChargedMultipartition:
        iota = cb.iota_l if self.side == "l" else cb.iota_n
        return iota(lam, self.s, self.n, self.l)


def _select_blocks(spec: JobSpec, build: Callable) -> list[Block]:
    side = spec.label_side
    if side is None:
        M = build(spec.s, spec.size, None, "l")
        return [Block(spec.n, spec.l, spec.s, spec.size, None, "l", M.labels, lambda a, b, M=M: M[(a, b)])]
    out = []
    for d, labels in multipartition_blocks(spec.n, spec.l, spec.charges, spec.size, side):
        M = build(spec.s, d, spec.charges, side)
        keep = set(labels)
        for (a, b), c in M.entries.items():
            if c and (a in keep) != (b in keep):
                raise AssertionError(f"block does not split at ({a}, {b})")
        out.append(Block(spec.n, spec.l, spec.s, d, spec.charges, side, labels,
                         lambda a, b, M=M: M[(a, b)]))
    return out


def _tex_partition(p: Partition) -> str:
    body = cb.partition_str(p)
    return r"\emptyset" if body == "∅" else body.replace(",", ", ")


def _tex_multi(cmp: ChargedMultipartition) -> str:
    return "(" + ", ".join(_tex_partition(p) for p in cmp.parts) + ")"


def emit_matrix(blocks: list[Block], fmt: str, title: str) -> str:
    """Rows are ``mu`` with their multipartition label, columns ``lam``; cell = M[lam, mu]."""
    if fmt == "json":
        doc = []
        for b in blocks:
            doc.append({
                "matrix": title, "n": b.n, "l": b.l, "s": b.s, "size": b.d,
                "charges": None if b.charges is None else list(b.charges), "side": b.side,
                "labels": [{"lambda": list(lam),
                            "multipartition": [list(p) for p in b.multilabel(lam).parts],
                            "charges": list(b.multilabel(lam).charges)} for lam in b.labels],
                "columns": [{"lambda": list(lam),
                             "entries": [{"mu": list(mu), "coeff": b.get(lam, mu).to_json()}
                                         for mu in b.labels if b.get(lam, mu)]}
                            for lam in b.labels],
            })
        return json.dumps(doc, indent=1)
    lines = []
    for b in blocks:
        if fmt == "tsv":
            lines.append(f"# {title} n={b.n} l={b.l} s={b.s} |lambda|={b.d}"
                         + ("" if b.charges is None else " charges=" + ",".join(map(str, b.charges))))
            lines.append("\t".join(["mu", "label"] + [cb.partition_str(lam) for lam in b.labels]))
            for mu in b.labels:
                cells = [b.get(lam, mu).pretty() for lam in b.labels]
                lines.append("\t".join([cb.partition_str(mu), str(b.multilabel(mu))] + cells))
        elif fmt == "latex":
            lines.append(r"\begin{displaymath}")
            lines.append(r"\begin{array}{l|l| " + " ".join("c" * len(b.labels)) + "}")
            rows = []
            for mu in b.labels:
                cells = [b.get(lam, mu).latex() for lam in b.labels]
                rows.append(" & ".join([_tex_partition(mu), _tex_multi(b.multilabel(mu))] + cells))
            lines.append(" \\cr\n".join(rows))
            lines.append(r"\end{array}")
            lines.append(r"\end{displaymath}")
        else:
            raise UsageError(f"unknown format {fmt!r}")
    return "\n".join(lines)


# --- commands -------------------------------------------------------------------------------


def cmd_dmat(spec: JobSpec) -> tuple[int, str]:
    def build(s, d, charges, side):
        return canonical_block(spec.n, spec.l, s, d, spec.sign, charges, side)
    blocks = _select_blocks(spec, build)
    return EXIT_OK, emit_matrix(blocks, spec.fmt, f"D{'+' if spec.sign == 'plus' else '-'}")


def cmd_amat(spec: JobSpec) -> tuple[int, str]:
    def build(s, d, charges, side):
        return bar_matrix_block(spec.n, spec.l, s, d, charges, side)
    return EXIT_OK, emit_matrix(_select_blocks(spec, build), spec.fmt, "A")


def _vector_from_args(spec: JobSpec) -> FockVector:
    ex = spec.extra
    if ex.get("vector"):
        return FockVector.from_json(json.loads(Path(ex["vector"]).read_text()))
    if ex.get("multi") is not None:
        parts = parse_multipartition(ex["multi"])
        side = spec.label_side or "l"
        if len(parts) != len(spec.charges):
            raise UsageError("multipartition and charge vector differ in length")
        return FockVector.phi_multi(ChargedMultipartition(parts, spec.charges), spec.n, spec.l, side)
    if ex.get("lam") is not None:
        if len(spec.charges) != 1:
            raise UsageError("--lambda takes a single integer charge --s")
        return FockVector.phi(parse_partition(ex["lam"]), spec.s, spec.n, spec.l)
    raise UsageError("give one of --lambda, --multi or --vector")


def _vector_json(v: FockVector, side: str) -> str:
    doc = v.to_json()
    iota = cb.iota_l if side == "l" else cb.iota_n
    for t in doc["terms"]:
        cmp = iota(tuple(t["lambda"]), v.s, v.n, v.l)
        t["multipartition"] = [list(p) for p in cmp.parts]
        t["charges"] = list(cmp.charges)
    return json.dumps(doc, indent=1)


def cmd_bar(spec: JobSpec) -> tuple[int, str]:
    v = _vector_from_args(spec)
    return EXIT_OK, _vector_json(bar_fock(v), spec.label_side or "l")


def cmd_act(spec: JobSpec) -> tuple[int, str]:
    v = _vector_from_args(spec)
    gen = spec.extra["gen"]
    try:
        name, idx = gen.split(":")
        gen_t = (name, int(idx))
    except ValueError:
        raise UsageError(f"generator must look like f:0, not {gen!r}") from None
    w = chevalley_action(gen_t, spec.extra["act_side"], v)
    return EXIT_OK, _vector_json(w, spec.label_side or "l")


def cmd_straighten(spec: JobSpec) -> tuple[int, str]:
    idx = parse_ints(spec.extra["indices"])
    vec = normal_form(idx, spec.n, spec.l)
    return EXIT_OK, json.dumps({"n": spec.n, "l": spec.l, "input": list(idx),
                                "terms": vector_to_json(vec)}, indent=1)


def cmd_klcheck(spec: JobSpec) -> tuple[int, str]:
    from .hecke import d_via_kl_partitions

    def build(s, d, charges, side):
        return canonical_block(spec.n, spec.l, s, d, spec.sign, charges, side)
    lines = []
    bad = 0
    for b in _select_blocks(spec, build):
        for lam in b.labels:
            for mu in b.labels:
                x = b.get(lam, mu)
                y = d_via_kl_partitions(lam, mu, b.s, b.n, b.l, spec.sign)
                ok = x == y
                bad += not ok
                lines.append("\t".join([("agree" if ok else "DISAGREE"), cb.partition_str(lam),
                                        cb.partition_str(mu), x.pretty(), y.pretty()]))
    lines.append(f"# {len(lines)} entries, {bad} disagreements")
    return (EXIT_MISMATCH if bad else EXIT_OK), "\n".join(lines)


def cmd_fixtures(spec: JobSpec) -> tuple[int, str]:
    from . import fixtures

    fx = fixtures.load(spec.extra.get("path"))
    if spec.extra["action"] == "load":
        lines = [f"n={fx.n} l={fx.l} charges={','.join(map(str, fx.charges))} sign={fx.sign}"]
        for b in fx.blocks:
            lines.append(f"|lambda_l|={b.multisize} |lambda|={b.size} labels={len(b.labels)} "
                         f"nonzero={len(b.entries)}")
        return EXIT_OK, "\n".join(lines)
    lines = []
    bad = 0
    for rep in fixtures.verify(fx):
        bad += not rep.ok
        lines.append(f"{'PASS' if rep.ok else 'FAIL'} |lambda_l|={rep.multisize} |lambda|={rep.size}"
                     + ("" if rep.labels_ok else " label mismatch")
                     + "".join(f"\n  D[{cb.partition_str(a)}, {cb.partition_str(m)}]: "
                               f"table {w.pretty()} computed {g.pretty()}"
                               for a, m, w, g in rep.mismatches))
    return (EXIT_MISMATCH if bad else EXIT_OK), "\n".join(lines)


COMMANDS = {"dmat": cmd_dmat, "amat": cmd_amat, "bar": cmd_bar, "act": cmd_act,
            "straighten": cmd_straighten, "klcheck": cmd_klcheck, "fixtures": cmd_fixtures}


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="fockcanon", description="Transition matrices of global bases on level-l Fock spaces.")
    p.add_argument("--cache-dir", dest="cache_dir",
                   help=f"bar-row cache directory (default: ${cache.ENV_VAR}, unset disables)")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, size=True, sign=False, fmt=False):
        sp.add_argument("--n", type=int, default=2)
        sp.add_argument("--l", type=int, default=2)
        sp.add_argument("--s", default="0", help="charge s, or a charge vector such as 0,0")
        sp.add_argument("--side", choices=("l", "n"), default="l",
                        help="which labeling a charge vector refers to when n == l")
        if size:
            sp.add_argument("--size", type=int, required=True,
                            help="|lambda| for a bare charge, multipartition size for a vector")
        if sign:
            sp.add_argument("--sign", choices=("plus", "minus"), default="plus")
        if fmt:
            sp.add_argument("--format", choices=("json", "tsv", "latex"), default="json")

    common(sub.add_parser("dmat", help="transition matrix D"), sign=True, fmt=True)
    common(sub.add_parser("amat", help="bar involution matrix A"), fmt=True)
    for name in ("bar", "act"):
        sp = sub.add_parser(name)
        common(sp, size=False)
        sp.add_argument("--lambda", dest="lam")
        sp.add_argument("--multi", help='multipartition such as "2,1|1"')
        sp.add_argument("--vector", help="FockVector JSON file")
        if name == "act":
            sp.add_argument("--gen", required=True, help="f:i, e:i or t:i")
            sp.add_argument("--act-side", dest="act_side", choices=("n", "l"), default="n",
                            help="n: U_q(sl_n) generators, l: U_q(sl_l) generators")
    sp = sub.add_parser("straighten")
    sp.add_argument("--n", type=int, default=2)
    sp.add_argument("--l", type=int, default=2)
    sp.add_argument("--indices", required=True)
    common(sub.add_parser("klcheck"), sign=True)
    sp = sub.add_parser("fixtures")
    sp.add_argument("action", choices=("load", "verify"))
    sp.add_argument("--path")
    return p


def spec_from_args(ns: argparse.Namespace) -> JobSpec:
    extra = {k: v for k, v in vars(ns).items()
             if k not in ("command", "n", "l", "s", "size", "sign", "format", "side", "cache_dir")}
    return JobSpec(
        command=ns.command, n=getattr(ns, "n", 2), l=getattr(ns, "l", 2),
        charges=parse_charges(getattr(ns, "s", "0")), size=getattr(ns, "size", 0) or 0,
        sign=getattr(ns, "sign", "plus"), fmt=getattr(ns, "format", "json"),
        side=getattr(ns, "side", "l"), cache_dir=ns.cache_dir, extra=extra)


def run(spec: JobSpec) -> tuple[int, str]:
    spec.validate()
    return COMMANDS[spec.command](spec)


def main(argv: Sequence[str] | None = None) -> int:
    ns = build_parser().parse_args(argv)
    try:
        spec = spec_from_args(ns)
        cache_file = cache.enable(spec.cache_dir)
        try:
            code, text = run(spec)
            if cache_file is not None:
                cache.save(spec.cache_dir)
        finally:
            cache.disable()
    except (UsageError, ValueError, OSError) as exc:
        print(f"fockcanon: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (AssertionError, StraighteningError, TruncationError) as exc:
        print(f"fockcanon: internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
