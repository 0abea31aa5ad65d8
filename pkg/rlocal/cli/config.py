"""Run configuration: dataclass defaults, an optional TOML file, then flags."""

from __future__ import annotations

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib
from dataclasses import dataclass, field, fields, replace
from pathlib import Path

from ..errors import ContractViolation

OUTPUT_FORMATS = ("json", "dot")


@dataclass(frozen=True)
class Caps:
    cycles: int = 10 ** 6
    candidates: int = 10 ** 7
    tstars: int = 200_000
    branch: int = 500
    window_nodes: int = 20_000


@dataclass(frozen=True)
class RunConfig:
    r: int = 3
    kmax: int = 1
    caps: Caps = field(default_factory=Caps)
    window_radius: int = 8
    output_format: str = "json"
    force_beyond_guarantee: bool = False

    def validate(self) -> "RunConfig":
        for cap in fields(Caps):
            if getattr(self.caps, cap.name) <= 0:
                raise ContractViolation(f"cap {cap.name} must be positive")
        if self.r < 0:
            raise ContractViolation("r must be non-negative")
        if self.kmax < 0:
            raise ContractViolation("kmax must be non-negative")
        if self.window_radius < 1:
            raise ContractViolation("window radius must be at least 1")
        if self.output_format not in OUTPUT_FORMATS:
            raise ContractViolation(f"output format must be one of {', '.join(OUTPUT_FORMATS)}")
        return self

    def with_overrides(self, **overrides) -> "RunConfig":
        caps = {k: v for k, v in overrides.pop("caps", {}).items() if v is not None}
        top = {k: v for k, v in overrides.items() if v is not None}
        return replace(self, caps=replace(self.caps, **caps), **top)


def load_config(path: str | Path | None) -> RunConfig:
    """Defaults updated by a TOML file whose keys are the field names, caps in a [caps] table."""
    config = RunConfig()
    if path is None:
        return config
    try:
        data = tomllib.loads(Path(path).read_text(encoding="utf-8"))
    except tomllib.TOMLDecodeError as exc:
        raise ContractViolation(f"{path}: {exc}") from exc
    known = {f.name for f in fields(RunConfig)}
    unknown = set(data) - known
    if unknown:
        raise ContractViolation(f"{path}: unknown keys {', '.join(sorted(unknown))}")
    caps = data.pop("caps", {})
    known_caps = {f.name for f in fields(Caps)}
    if set(caps) - known_caps:
        raise ContractViolation(f"{path}: unknown caps {', '.join(sorted(set(caps) - known_caps))}")
    return config.with_overrides(caps=caps, **data)
