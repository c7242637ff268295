"""Check results and deterministic report rendering."""

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    detail: str = ""
    status: str = ""

    @property
    def state(self):
        return self.status or ("pass" if self.ok else "fail")


def skip(name, detail=""):
    return Check(name, True, detail, status="skip")


def first_failure(checks):
    for c in checks:
        if not c.ok:
            return c
    return None


@dataclass
class RunReport:
    suite: str
    algebra: str
    params: dict
    checks: list = field(default_factory=list)
    timing: float = None

    @property
    def ok(self):
        return all(c.ok for c in self.checks)

    def sorted_checks(self):
        return sorted(self.checks, key=lambda c: c.name)

    def render_text(self):
        lines = [f"suite: {self.suite}", f"algebra: {self.algebra}"]
        for k in sorted(self.params):
            lines.append(f"param {k}: {self.params[k]}")
        for c in self.sorted_checks():
            line = f"[{c.state.upper():4}] {c.name}"
            if c.detail:
                line += f" :: {c.detail}"
            lines.append(line)
        n_fail = sum(not c.ok for c in self.checks)
        lines.append(f"summary: {len(self.checks)} checks, {n_fail} failed")
        if self.timing is not None:
            lines.append(f"wall-clock: {self.timing:.3f}s")
        return "\n".join(lines) + "\n"

    def render_kv(self):
        lines = [f"suite={self.suite}", f"algebra={self.algebra}"]
        for k in sorted(self.params):
            lines.append(f"param.{k}={self.params[k]}")
        for c in self.sorted_checks():
            lines.append(f"check.{c.name}.status={c.state}")
            if c.detail:
                lines.append(f"check.{c.name}.detail={c.detail}")
        lines.append(f"failed={sum(not c.ok for c in self.checks)}")
        if self.timing is not None:
            lines.append(f"wall_clock={self.timing:.3f}")
        return "\n".join(lines) + "\n"
