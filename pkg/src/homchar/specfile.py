"""Plain-text algebra files.

A file lists a finite-dimensional DG-bialgebra by its structure constants::

    # functions on Z/2
    [meta]
    name = z2
    field = QQ

    [basis]
    e0 0
    e1 0

    [unit]
    e0 + e1

    [product]
    e0 e0 -> e0
    e1 e1 -> e1

    [coproduct]
    e0 -> e0|e0 + e1|e1
    e1 -> e0|e1 + e1|e0

    [counit]
    e0 -> 1
    e1 -> 0

Expressions are sums of ``coeff*monomial`` terms; a coefficient is an
integer or ``p/q`` and defaults to 1; a monomial is a label or labels joined
by ``|`` (``⊗`` also accepted).  Missing products and differentials are
zero.  Every label needs a coproduct and a counit line.  ``#`` starts a
comment.  Labels are made of letters, digits, ``_``, ``.`` and ``'``.
"""

import re
from fractions import Fraction

from .axioms import check_bialgebra_axioms
from .graded import fmt_coeff
from .hopf import TableHopf

SECTIONS = ("meta", "basis", "unit", "product", "coproduct", "counit", "differential")

_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<label>[A-Za-z_][A-Za-z0-9_.']*)|(?P<op>->|[+\-*|⊗]))"
)


class SpecError(ValueError):
    def __init__(self, line, col, msg):
        super().__init__(f"line {line}, column {col}: {msg}")
        self.line = line
        self.col = col
        self.msg = msg


def _tokens(text, lineno, offset):
    out = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            col = offset + pos + len(text[pos:]) - len(text[pos:].lstrip()) + 1
            raise SpecError(lineno, col, f"unexpected character {text[col - offset - 1]!r}")
        kind = m.lastgroup
        start = m.start(kind)
        out.append((kind, m.group(kind), offset + start + 1))
        pos = m.end()
    return out


class _Line:
    def __init__(self, lineno, text, offset=0):
        self.lineno = lineno
        self.text = text
        self.toks = _tokens(text, lineno, offset)
        self.i = 0
        self.end_col = offset + len(text.rstrip()) + 1

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None, self.end_col)

    def take(self):
        t = self.peek()
        self.i += 1
        return t

    def fail(self, msg, tok=None):
        tok = tok or self.peek()
        raise SpecError(self.lineno, tok[2], msg)

    def expect_label(self, labels=None):
        kind, val, col = self.take()
        if kind != "label":
            raise SpecError(self.lineno, col, f"expected a label, found {val or 'end of line'!r}")
        if labels is not None and val not in labels:
            raise SpecError(self.lineno, col, f"undeclared label {val!r}")
        return val

    def done(self):
        kind, val, col = self.peek()
        if kind is not None:
            raise SpecError(self.lineno, col, f"unexpected {val!r}")


def _coeff(tok, line):
    kind, val, col = tok
    num, _, den = val.partition("/")
    if den and int(den) == 0:
        raise SpecError(line.lineno, col, "zero denominator")
    return Fraction(int(num), int(den) if den else 1)


def _expression(line, labels, arity=None):
    """Parse ``sum coeff*monomial``; ``arity=0`` means pure scalars."""
    out = {}
    first = True
    while True:
        kind, val, col = line.peek()
        s = 1
        if kind == "op" and val in "+-":
            line.take()
            s = -1 if val == "-" else 1
        elif not first:
            if kind is None:
                break
            line.fail(f"expected '+' or '-', found {val!r}")
        first = False
        kind, val, col = line.peek()
        c = Fraction(1)
        word = ()
        if kind == "num":
            c = _coeff(line.take(), line)
            if line.peek()[:2] == ("op", "*"):
                line.take()
                word = _monomial(line, labels)
            elif line.peek()[0] == "label":
                line.fail("missing '*' between coefficient and monomial")
        elif kind == "label":
            word = _monomial(line, labels)
        else:
            line.fail(f"expected a term, found {val or 'end of line'!r}")
        if arity is not None and len(word) != arity and (word or c):
            raise SpecError(line.lineno, col, f"expected a term with {arity} tensor factor(s)")
        if c:
            v = out.get(word, 0) + s * c
            if v:
                out[word] = v
            else:
                out.pop(word, None)
        if line.peek()[0] is None:
            break
    return out


def _monomial(line, labels):
    word = [line.expect_label(labels)]
    while line.peek()[:2] in (("op", "|"), ("op", "⊗")):
        line.take()
        word.append(line.expect_label(labels))
    return tuple(word)


def parse_spec(text, window=None):
    """Build a :class:`TableHopf`; the axiom report is attached as ``axiom_report``."""
    section = None
    meta = {}
    degrees = {}
    unit = None
    product, coproduct, counit, differential = {}, {}, {}, {}
    seen_at = {}
    lines = text.splitlines()
    for lineno, raw in enumerate(lines, start=1):
        body = raw.split("#", 1)[0]
        if not body.strip():
            continue
        stripped = body.strip()
        if stripped.startswith("["):
            m = re.fullmatch(r"\[\s*([a-z]+)\s*\]", stripped)
            col = body.index("[") + 1
            if not m or m.group(1) not in SECTIONS:
                raise SpecError(lineno, col, f"unknown section header {stripped!r}")
            section = m.group(1)
            continue
        if section is None:
            raise SpecError(lineno, len(body) - len(body.lstrip()) + 1, "content before the first section header")
        if section == "meta":
            key, eq, val = body.partition("=")
            if not eq or not key.strip():
                raise SpecError(lineno, 1, "expected 'key = value'")
            meta[key.strip()] = val.strip()
            continue
        line = _Line(lineno, body)
        if section == "basis":
            lab = line.expect_label()
            kind, val, col = line.take()
            sgn = 1
            if (kind, val) == ("op", "-"):
                sgn = -1
                kind, val, col = line.take()
            if kind != "num" or "/" in val:
                raise SpecError(lineno, col, "expected an integer degree")
            line.done()
            if lab in degrees:
                raise SpecError(lineno, line.toks[0][2], f"label {lab!r} declared twice")
            degrees[lab] = sgn * int(val)
            continue
        labels = degrees
        if section == "unit":
            if unit is not None:
                line.fail("second [unit] expression")
            unit = {w[0]: c for w, c in _expression(line, labels, arity=1).items()}
            continue
        if section == "product":
            a = line.expect_label(labels)
            b = line.expect_label(labels)
            key = (a, b)
        else:
            a = line.expect_label(labels)
            key = a
        kind, val, col = line.take()
        if (kind, val) != ("op", "->"):
            raise SpecError(lineno, col, f"expected '->', found {val or 'end of line'!r}")
        table = {"product": product, "coproduct": coproduct, "counit": counit, "differential": differential}[section]
        if key in table:
            raise SpecError(lineno, line.toks[0][2], f"duplicate {section} entry for {key!r}")
        arity = {"product": 1, "coproduct": 2, "counit": 0, "differential": 1}[section]
        expr = _expression(line, labels, arity=arity)
        if section == "counit":
            table[key] = expr.get((), Fraction(0))
        elif section == "coproduct":
            table[key] = expr
        else:
            table[key] = {w[0]: c for w, c in expr.items()}
        seen_at[(section, key)] = lineno
    end = len(lines) + 1
    if not degrees:
        raise SpecError(end, 1, "no [basis] labels declared")
    if unit is None:
        raise SpecError(end, 1, "missing [unit] section")
    for lab in degrees:
        if lab not in coproduct:
            raise SpecError(end, 1, f"label {lab!r} has no coproduct entry")
        if lab not in counit:
            raise SpecError(end, 1, f"label {lab!r} has no counit entry")
    A = TableHopf(
        list(degrees), degrees, unit,
        {k: v for k, v in product.items() if v},
        coproduct, counit,
        {k: v for k, v in differential.items() if v},
        name=meta.get("name", "spec"),
    )
    A.meta = meta
    A.axiom_report = check_bialgebra_axioms(A, window)
    A.axioms_ok = all(c.ok for c in A.axiom_report)
    return A


def label_name(label):
    """Spec-file token for a built-in label (tuples are joined with '.')."""
    if isinstance(label, tuple):
        return ".".join(label_name(x) for x in label)
    s = str(label)
    if s[:1].isdigit() or s.startswith("-"):
        s = "b" + s.replace("-", "m")
    return s


def _fmt_expr(x, render_word):
    if not x:
        return "0"
    parts = []
    for w, c in x:
        body = render_word(w)
        if c == 1 and body:
            parts.append(f"+ {body}")
        elif c == -1 and body:
            parts.append(f"- {body}")
        else:
            cs = fmt_coeff(abs(c))
            parts.append(("- " if c < 0 else "+ ") + (f"{cs}*{body}" if body else cs))
    s = " ".join(parts)
    return s[2:] if s.startswith("+ ") else "-" + s[1:]


def render(A, window=None):
    """Serialize a finite oracle in the format accepted by :func:`parse_spec`."""
    B = A.basis(window)
    name = {l: label_name(l) for l in B}
    if len(set(name.values())) != len(B):
        raise ValueError("labels do not have distinct spec-file names")
    order = {l: i for i, l in enumerate(B)}

    def items(d, key):
        return sorted(((k, v) for k, v in d.items() if v), key=lambda kv: key(kv[0]))

    lab = lambda w: name[w]
    pair = lambda w: f"{name[w[0]]}|{name[w[1]]}"
    out = ["[meta]", f"name = {A.name}", "field = QQ", "", "[basis]"]
    out += [f"{name[l]} {A.deg(l)}" for l in B]
    out += ["", "[unit]", _fmt_expr(items(A.unit, order.get), lab), "", "[product]"]
    for a in B:
        for b in B:
            p = A.mul_basis(a, b)
            if p:
                out.append(f"{name[a]} {name[b]} -> {_fmt_expr(items(p, order.get), lab)}")
    out += ["", "[coproduct]"]
    for a in B:
        cop = items(A.coproduct_basis(a), lambda w: (order[w[0]], order[w[1]]))
        out.append(f"{name[a]} -> {_fmt_expr(cop, pair)}")
    out += ["", "[counit]"]
    for a in B:
        out.append(f"{name[a]} -> {fmt_coeff(A.counit_basis(a))}")
    diffs = [(a, A.d_basis(a)) for a in B if A.d_basis(a)]
    if diffs:
        out += ["", "[differential]"]
        for a, d in diffs:
            out.append(f"{name[a]} -> {_fmt_expr(items(d, order.get), lab)}")
    return "\n".join(out) + "\n"


def structure_constants(A, window=None, rename=None):
    """All structure constants keyed by (renamed) labels; used to compare oracles."""
    B = A.basis(window)
    r = rename or (lambda l: l)
    clean = lambda d: {k: Fraction(v) for k, v in d.items() if v}
    return {
        "degrees": {r(l): A.deg(l) for l in B},
        "unit": clean({r(l): c for l, c in A.unit.items()}),
        "product": {(r(a), r(b)): clean({r(l): c for l, c in A.mul_basis(a, b).items()}) for a in B for b in B},
        "coproduct": {r(a): clean({(r(x), r(y)): c for (x, y), c in A.coproduct_basis(a).items()}) for a in B},
        "counit": {r(a): Fraction(A.counit_basis(a)) for a in B},
        "differential": {r(a): clean({r(l): c for l, c in A.d_basis(a).items()}) for a in B},
    }


def load_algebra(ref):
    """A built-in name or a path to a spec file."""
    from pathlib import Path

    from .hopf import BUILTINS, builtin

    if ref in BUILTINS:
        return builtin(ref)
    p = Path(ref)
    if not p.exists():
        raise KeyError(f"unknown algebra {ref!r}: not a built-in ({', '.join(sorted(BUILTINS))}) and no such file")
    return parse_spec(p.read_text(encoding="utf-8"))
