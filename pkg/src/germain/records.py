"""JSON wire format for command output.

One :class:`OutputRecord` per invocation::

    {"command": ..., "parameters": {...}, "version": ..., "payload": {"type": ..., ...}}

Payload ``type`` is one of ``residue_set``, ``sgt_certificate``,
``legendre_table``, ``scan_report``, ``size_bound``.  Arbitrary-precision
fields of ``size_bound`` (``product``, ``min_max_solution``) are decimal
strings so consumers without big integers do not lose digits.  Fields are
only ever added, never renamed.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Union

from . import __version__
from .bounds import SizeBound
from .residues import ResidueSet, SgtCertificate
from .search import LegendreRow, ScanReport

Payload = Union[ResidueSet, SgtCertificate, list, ScanReport, SizeBound]


def _residues_to_dict(rs: ResidueSet) -> dict[str, Any]:
    return {
        "type": "residue_set",
        "exponent": rs.exponent,
        "modulus": rs.modulus,
        "members": list(rs.members),
    }


def _certificate_to_dict(c: SgtCertificate) -> dict[str, Any]:
    return {
        "type": "sgt_certificate",
        "exponent": c.exponent,
        "modulus": c.modulus,
        "nc_holds": c.nc_holds,
        "p_not_residue_holds": c.p_not_residue_holds,
        "nc_witness": list(c.nc_witness) if c.nc_witness else None,
        "p_witness": c.p_witness,
        "consequence": c.consequence,
    }


def _certificate_from_dict(d: dict[str, Any]) -> SgtCertificate:
    w = d.get("nc_witness")
    return SgtCertificate(
        d["exponent"],
        d["modulus"],
        d["nc_holds"],
        d["p_not_residue_holds"],
        tuple(w) if w else None,
        d.get("p_witness"),
    )


def payload_to_dict(payload: Payload) -> dict[str, Any]:
    if isinstance(payload, ResidueSet):
        return _residues_to_dict(payload)
    if isinstance(payload, SgtCertificate):
        return _certificate_to_dict(payload)
    if isinstance(payload, ScanReport):
        return {
            "type": "scan_report",
            "p": payload.p,
            "bound": payload.bound,
            "condition": payload.condition,
            "exhaustive": payload.exhaustive,
            "candidates_tested": payload.candidates_tested,
            "qualifying": list(payload.qualifying),
        }
    if isinstance(payload, SizeBound):
        return {
            "type": "size_bound",
            "p": payload.p,
            "auxiliaries": list(payload.auxiliaries),
            "product": str(payload.product),
            "min_max_solution": str(payload.min_max_solution),
            "decimal_digits": payload.decimal_digits,
        }
    if isinstance(payload, list):
        return {
            "type": "legendre_table",
            "rows": [
                {
                    "p": r.p,
                    "N": r.N,
                    "theta": r.theta,
                    "residues": list(r.residues.members),
                    "certificate": _certificate_to_dict(r.certificate),
                }
                for r in payload
            ],
        }
    raise TypeError(f"cannot serialise {type(payload).__name__}")


def payload_from_dict(d: dict[str, Any]) -> Payload:
    kind = d["type"]
    if kind == "residue_set":
        return ResidueSet(d["exponent"], d["modulus"], tuple(d["members"]))
    if kind == "sgt_certificate":
        return _certificate_from_dict(d)
    if kind == "scan_report":
        return ScanReport(
            p=d["p"],
            bound=d["bound"],
            qualifying=tuple(d["qualifying"]),
            exhaustive=d["exhaustive"],
            condition=d["condition"],
            candidates_tested=d.get("candidates_tested", 0),
        )
    if kind == "size_bound":
        return SizeBound(
            d["p"],
            tuple(d["auxiliaries"]),
            int(d["product"]),
            int(d["min_max_solution"]),
            d["decimal_digits"],
        )
    if kind == "legendre_table":
        return [
            LegendreRow(
                r["p"],
                r["N"],
                r["theta"],
                ResidueSet(r["p"], r["theta"], tuple(r["residues"])),
                _certificate_from_dict(r["certificate"]),
            )
            for r in d["rows"]
        ]
    raise ValueError(f"unknown payload type {kind!r}")


@dataclass(frozen=True)
class OutputRecord:
    command: str
    parameters: dict[str, Any]
    payload: Payload
    version: str = field(default=__version__)

    def to_json(self) -> str:
        return json.dumps(
            {
                "command": self.command,
                "parameters": self.parameters,
                "version": self.version,
                "payload": payload_to_dict(self.payload),
            },
            indent=2,
        )

    @classmethod
    def from_json(cls, text: str) -> OutputRecord:
        d = json.loads(text)
        return cls(d["command"], d["parameters"], payload_from_dict(d["payload"]), d["version"])
