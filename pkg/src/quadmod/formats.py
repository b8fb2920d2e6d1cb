"""JSON readers and writers for certificates, irreducible representations and forms.

Writers emit ``json.dumps(..., indent=2, sort_keys=True)`` so equal objects
serialise to identical bytes.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

import numpy as np

from .algebra import Carrier, CarrierError, FreeStar, GroupRing, StarElement
from .certificates import (
    Certificate,
    CertificateError,
    CertTerm,
    ModulePresentation,
    NormCertificate,
)
from .expressions import (
    ExpressionError,
    carrier_spec,
    element_from_json,
    element_to_json,
    parse_carrier,
)
from .forms import PositiveForm, form_from_values
from .irreps import IrrepSet
from .representations import BasisRepresentation


class FormatError(ValueError):
    pass


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def _load(source):
    if isinstance(source, (dict, list)):
        return source
    if isinstance(source, Path) or (isinstance(source, str) and not source.lstrip().startswith(("{", "["))):
        source = Path(source).read_text(encoding="utf-8")
    try:
        return json.loads(source)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from None


def _fraction(text) -> Fraction:
    try:
        return Fraction(str(text))
    except (ValueError, ZeroDivisionError):
        raise FormatError(f"bad rational {text!r}") from None


# presentations and certificates ---------------------------------------------


def presentation_to_json(pres: ModulePresentation) -> dict:
    out = {"carrier": carrier_spec(pres.carrier), "generators": [element_to_json(s) for s in pres.generators]}
    if pres.archimedean_witness is not None:
        out["archimedean_witness"] = pres.archimedean_witness
    return out


def presentation_from_json(obj) -> ModulePresentation:
    obj = _load(obj)
    try:
        car = parse_carrier(obj["carrier"])
        gens = tuple(element_from_json(g, car) for g in obj.get("generators", []))
    except KeyError as exc:
        raise FormatError(f"presentation is missing {exc}") from None
    return ModulePresentation(car, gens, obj.get("archimedean_witness"))


def certificate_to_json(cert: Certificate | NormCertificate, pres: ModulePresentation,
                        target: StarElement | None = None) -> dict:
    """Serialise a certificate with its claim (``target``, or ``bound^2 - a a^*`` for norm certificates)."""
    claims = {}
    if isinstance(cert, NormCertificate):
        claims["bound"] = str(cert.bound)
        claims["element"] = element_to_json(cert.element)
        target = cert.target()
        cert = cert.cert
    if target is None:
        raise CertificateError("a certificate is serialised together with its target")
    claims["target"] = element_to_json(target)
    terms = [{"weight": str(t.weight), "conjugator": element_to_json(t.conjugator), "generator": t.generator}
             for t in cert.terms]
    return {"presentation": presentation_to_json(pres), "terms": terms, "claims": claims}


def certificate_from_json(obj):
    """Returns ``(presentation, certificate, target, norm_certificate_or_None)``."""
    obj = _load(obj)
    try:
        pres = presentation_from_json(obj["presentation"])
        car = pres.carrier
        terms = tuple(
            CertTerm(_fraction(t["weight"]), element_from_json(t["conjugator"], car), int(t.get("generator", 0)))
            for t in obj["terms"]
        )
        claims = obj["claims"]
        target = element_from_json(claims["target"], car)
    except KeyError as exc:
        raise FormatError(f"certificate is missing {exc}") from None
    cert = Certificate(terms)
    nc = None
    if "bound" in claims and "element" in claims:
        nc = NormCertificate(_fraction(claims["bound"]), element_from_json(claims["element"], car), cert)
    return pres, cert, target, nc


# irreducible representations --------------------------------------------------


def _grid(m: np.ndarray) -> list:
    return [[[float(z.real), float(z.imag)] for z in row] for row in np.asarray(m)]


def _ungrid(g) -> np.ndarray:
    return np.array([[complex(re, im) for re, im in row] for row in g], dtype=complex)


def _basis_label(carrier: Carrier, key) -> str:
    return basis_word(carrier, key)


def irreps_to_json(irreps: IrrepSet, decimals: int = 12) -> dict:
    """Images of the group generators (all basis words for other carriers) and the character row."""
    car = irreps.carrier
    if isinstance(car, GroupRing):
        keys = car.group.generating_set()
    else:
        keys = car.basis()
    out = []
    for rep, chi in zip(irreps.irreps, irreps.characters):
        images = {_basis_label(car, k): _grid(np.round(rep.basis_image(k), decimals) + 0.0) for k in keys}
        out.append({
            "label": rep.label,
            "dimension": rep.dim,
            "images": images,
            "character": [[float(z.real), float(z.imag)] for z in np.round(chi, decimals) + 0.0],
        })
    return {"carrier": carrier_spec(car), "seed": irreps.seed, "irreps": out}


def irreps_from_json(obj) -> tuple[Carrier, list[BasisRepresentation], int | None]:
    """Rebuild representations; group images are extended from the generators to the whole group."""
    obj = _load(obj)
    car = parse_carrier(obj["carrier"])
    reps = []
    for item in obj["irreps"]:
        images = {parse_basis_word(car, w): _ungrid(g) for w, g in item["images"].items()}
        if isinstance(car, GroupRing):
            images = _extend_group_images(car, images, int(item["dimension"]))
        reps.append(BasisRepresentation(car, images, label=item.get("label", ""), irreducible=True))
    return car, reps, obj.get("seed")


def _extend_group_images(car: GroupRing, images: dict, d: int) -> dict:
    grp = car.group
    out = {grp.identity: np.eye(d, dtype=complex)}
    frontier = [grp.identity]
    while frontier:
        nxt = []
        for h in frontier:
            for g, m in images.items():
                p = grp.mul(h, g)
                if p not in out:
                    out[p] = out[h] @ m
                    nxt.append(p)
        frontier = nxt
    if len(out) != grp.order:
        raise FormatError("generator images do not reach every group element")
    return out


# forms -------------------------------------------------------------------------


def basis_word(carrier: Carrier, key) -> str:
    """Text naming a basis word: an expression on free and group carriers, compact JSON otherwise."""
    e = carrier.basis_element(key)
    if isinstance(carrier, (FreeStar, GroupRing)):
        return element_to_json(e)
    return json.dumps(element_to_json(e), separators=(",", ":"), ensure_ascii=False)


def parse_basis_word(carrier: Carrier, text: str):
    if isinstance(carrier, (FreeStar, GroupRing)):
        e = element_from_json(text, carrier)
    else:
        try:
            e = element_from_json(json.loads(text), carrier)
        except json.JSONDecodeError:
            raise FormatError(f"bad basis word {text!r}") from None
    items = list(e.items())
    if len(items) != 1 or items[0][1] != 1:
        raise FormatError(f"{text!r} is not a basis word")
    return items[0][0]


def form_to_json(f: PositiveForm, decimals: int = 12) -> dict:
    values = {}
    for k, v in zip(f.carrier.basis(), f.values):
        v = complex(np.round(v, decimals)) + 0
        if v != 0:
            values[basis_word(f.carrier, k)] = [float(v.real) + 0.0, float(v.imag) + 0.0]
    return {"carrier": carrier_spec(f.carrier), "values": values}


def form_from_json(obj, tol: float | None = None) -> PositiveForm:
    obj = _load(obj)
    try:
        car = parse_carrier(obj["carrier"])
        raw = obj["values"]
    except KeyError as exc:
        raise FormatError(f"form is missing {exc}") from None
    values = {}
    for word, v in raw.items():
        if isinstance(v, (int, float)):
            v = [v, 0]
        values[parse_basis_word(car, word)] = complex(v[0], v[1])
    return form_from_values(car, values) if tol is None else form_from_values(car, values, tol)


__all__ = [
    "FormatError", "dumps", "presentation_to_json", "presentation_from_json", "certificate_to_json",
    "certificate_from_json", "irreps_to_json", "irreps_from_json", "form_to_json", "form_from_json",
    "basis_word", "parse_basis_word", "ExpressionError", "CarrierError",
]
