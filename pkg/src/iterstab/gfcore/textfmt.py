"""Text form of polynomials and fields.

Polynomials: sparse ``x^10+x^9+3*x^2-x+1`` or dense ``[c0,c1,...,cd]``.
Fields: ``p`` or ``p^t/modulus`` (modulus in sparse form over F_p); a
further extension of a field is written ``<field>//<modulus>``.
Over extension fields a coefficient is the int encoding of the element.
"""
import re

from ..errors import ParseError
from .field import FieldDesc

_TERM = re.compile(
    r"""\s*(?P<sign>[+-])?\s*
    (?:
        (?P<coef>\d+)\s*(?:\*?\s*(?P<x1>x)(?:\s*\^\s*(?P<e1>\d+))?)?
      | (?P<x2>x)(?:\s*\^\s*(?P<e2>\d+))?
    )\s*""",
    re.VERBOSE,
)


def parse_terms(text):
    """Parse sparse or dense text into a dict exponent -> integer coefficient."""
    text = text.strip()
    if not text:
        raise ParseError("empty polynomial")
    if text.startswith("["):
        if not text.endswith("]"):
            raise ParseError(f"unterminated dense form: {text!r}")
        body = text[1:-1].strip()
        if not body:
            return {}
        try:
            vals = [int(tok) for tok in body.split(",")]
        except ValueError as exc:
            raise ParseError(f"bad dense coefficient in {text!r}") from exc
        return {i: c for i, c in enumerate(vals) if c}
    terms = {}
    pos = 0
    first = True
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"cannot parse {text!r} at offset {pos}")
        if not first and m.group("sign") is None:
            raise ParseError(f"missing operator in {text!r} at offset {pos}")
        first = False
        sign = -1 if m.group("sign") == "-" else 1
        if m.group("coef") is not None:
            coef = int(m.group("coef"))
            if m.group("x1"):
                e = int(m.group("e1")) if m.group("e1") else 1
            else:
                e = 0
        else:
            coef = 1
            e = int(m.group("e2")) if m.group("e2") else 1
        terms[e] = terms.get(e, 0) + sign * coef
        pos = m.end()
    return {e: c for e, c in terms.items() if c}


def _dense(terms):
    if not terms:
        return []
    out = [0] * (max(terms) + 1)
    for e, c in terms.items():
        out[e] = c
    return out


def parse_poly(text, field):
    from .poly import GFPoly

    if isinstance(field, (int, str)):
        field = parse_field(str(field))
    cs = _dense(parse_terms(text))
    if not field.is_prime_field:
        if any(c < 0 or c >= field.q for c in cs):
            raise ParseError(f"coefficients over {field!r} must be encodings in [0, {field.q})")
    return GFPoly(field, cs)


def parse_field(text):
    text = text.strip()
    if "//" in text:
        head, _, mod_text = text.rpartition("//")
        base = parse_field(head)
        return _extend(base, mod_text, None)
    m = re.fullmatch(r"(\d+)(?:\s*\^\s*(\d+)\s*(?:/(.*))?)?", text, re.DOTALL)
    if not m:
        raise ParseError(f"bad field syntax {text!r}")
    try:
        F = FieldDesc.prime(int(m.group(1)))
    except ValueError as exc:
        raise ParseError(str(exc)) from exc
    t = int(m.group(2)) if m.group(2) else 1
    if t < 1:
        raise ParseError("extension degree must be >= 1")
    if t == 1 and not m.group(3):
        return F
    if not m.group(3):
        from .irreducibles import default_modulus

        return FieldDesc.extension(default_modulus(F, t), check=False)
    return _extend(F, m.group(3), t)


def _extend(base, mod_text, t):
    from ..errors import ReducibleModulusError

    modulus = parse_poly(mod_text, base)
    if t is not None and modulus.degree != t:
        raise ParseError(f"modulus degree {modulus.degree} does not match t={t}")
    try:
        return FieldDesc.extension(modulus)
    except ReducibleModulusError as exc:
        raise ParseError(str(exc)) from exc


def format_terms(coeffs, var="x"):
    """Sparse text for a coefficient sequence of ints (signed allowed)."""
    parts = []
    for e in range(len(coeffs) - 1, -1, -1):
        c = coeffs[e]
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            mono = var if e == 1 else f"{var}^{e}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        parts.append((sign, body))
    if not parts:
        return "0"
    head_sign, head = parts[0]
    out = ("-" if head_sign == "-" else "") + head
    for sign, body in parts[1:]:
        out += sign + body
    return out


def format_poly(f):
    return format_terms(f.coeffs)


def format_field(F):
    if F.base is None:
        return str(F.p)
    if F.base.base is None:
        return f"{F.p}^{F.degree}/{format_terms(F.mod_coeffs)}"
    return f"{format_field(F.base)}//{format_terms(F.mod_coeffs)}"
