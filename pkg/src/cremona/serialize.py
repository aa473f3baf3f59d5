"""JSON encoding/decoding for the library's result types.

Schemas (all stable, all round-trippable):

  class      {"n": int, "coords": [int|string, ...]}
  word       [{"phi": [i, j, k]} | {"sigma": i}, ...]
  reduction  {"status": "in_cone"|"not_nef", "reduced": class,
              "witness": word, "violated": class|null, "iterations": int}
  verdict    {"verdict": "nef"|"not_nef",
              "method": "reduction_exact" | "curve_check:<max_degree>",
              "witness": word | class | null}
  cartan     [[{"sign": -1|0|1, "cos2": "p/q"}, ...], ...]
  ray        {"coords": [...], "square": int|string, "position": tag,
              "forward": bool, "active_set": [int, ...]}

Integers whose magnitude reaches 2^53 are emitted as decimal strings so
that consumers reading JSON numbers as doubles never lose digits; the
decoders accept either form.
"""

from __future__ import annotations

from fractions import Fraction

from .lattice import PicClass, pairing
from .nef import METHOD_CURVE_CHECK, METHOD_REDUCTION, NefVerdict
from .polytopes import CartanEntry, Ray
from .weyl import Generator, Phi, ReductionResult, Sigma, WeylWord

__all__ = [
    "encode_int",
    "decode_int",
    "encode_class",
    "decode_class",
    "encode_word",
    "decode_word",
    "encode_reduction",
    "decode_reduction",
    "encode_verdict",
    "decode_verdict",
    "encode_cartan",
    "decode_cartan",
    "encode_ray",
]

_SAFE = 1 << 53  # doubles represent integers exactly below this


def encode_int(x: int) -> int | str:
    return x if -_SAFE < x < _SAFE else str(x)


def decode_int(x: int | str) -> int:
    return int(x)


def encode_class(v: PicClass) -> dict:
    return {"n": v.n, "coords": [encode_int(c) for c in v.coords]}


def decode_class(obj: dict) -> PicClass:
    return PicClass(n=obj["n"], coords=tuple(decode_int(c) for c in obj["coords"]))


def _encode_generator(g: Generator) -> dict:
    if isinstance(g, Phi):
        return {"phi": [g.i, g.j, g.k]}
    return {"sigma": g.i}


def _decode_generator(obj: dict) -> Generator:
    if "phi" in obj:
        i, j, k = obj["phi"]
        return Phi(i, j, k)
    return Sigma(obj["sigma"])


def encode_word(w: WeylWord) -> list:
    return [_encode_generator(g) for g in w.gens]


def decode_word(obj: list) -> WeylWord:
    return WeylWord(tuple(_decode_generator(g) for g in obj))


def encode_reduction(r: ReductionResult) -> dict:
    return {
        "status": r.status,
        "reduced": encode_class(r.reduced),
        "witness": encode_word(r.witness),
        "violated": encode_class(r.violated) if r.violated is not None else None,
        "iterations": r.iterations,
    }


def decode_reduction(obj: dict) -> ReductionResult:
    return ReductionResult(
        status=obj["status"],
        reduced=decode_class(obj["reduced"]),
        witness=decode_word(obj["witness"]),
        violated=decode_class(obj["violated"]) if obj["violated"] is not None else None,
        iterations=obj["iterations"],
    )


def encode_verdict(v: NefVerdict) -> dict:
    method = (
        METHOD_REDUCTION
        if v.method == METHOD_REDUCTION
        else f"{METHOD_CURVE_CHECK}:{v.max_degree}"
    )
    if v.witness is None:
        witness = None
    elif isinstance(v.witness, WeylWord):
        witness = encode_word(v.witness)
    else:
        witness = encode_class(v.witness)
    return {"verdict": v.verdict, "method": method, "witness": witness}


def decode_verdict(obj: dict) -> NefVerdict:
    method = obj["method"]
    max_degree = None
    if method.startswith(METHOD_CURVE_CHECK):
        method, _, bound = method.partition(":")
        max_degree = int(bound)
    w = obj["witness"]
    if w is None:
        witness = None
    elif isinstance(w, list):
        witness = decode_word(w)
    else:
        witness = decode_class(w)
    return NefVerdict(
        verdict=obj["verdict"], method=method, witness=witness, max_degree=max_degree
    )


def encode_cartan(matrix: tuple[tuple[CartanEntry, ...], ...]) -> list:
    return [
        [{"sign": e.sign, "cos2": str(e.cos2)} for e in row] for row in matrix
    ]


def decode_cartan(obj: list) -> tuple[tuple[CartanEntry, ...], ...]:
    return tuple(
        tuple(CartanEntry(sign=e["sign"], cos2=Fraction(e["cos2"])) for e in row)
        for row in obj
    )


def encode_ray(r: Ray) -> dict:
    return {
        "coords": [encode_int(c) for c in r.generator.coords],
        "square": encode_int(pairing(r.generator, r.generator)),
        "position": r.position.tag,
        "forward": r.position.forward,
        "active_set": list(r.active_set),
    }
