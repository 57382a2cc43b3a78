"""Registry of named exact checks and the report they produce.

Each check carries a ``paper_ref`` anchor: a short formula string locating the
claim being certified.  Running a check yields ``(ok, witness)`` where the
witness is a printable counterexample or ``None``.
"""

from __future__ import annotations

import fnmatch
import json
import random
import time
from dataclasses import asdict, dataclass, field
from itertools import product

from .exact_field import LAMBDA, UniPoly, mpq
from .g2_core import D, D_pointwise, build_g2
from .octonion import IMAGINARY_BASIS, L, NAMED, I, J as QJ
from .representations import (
    action_on_complement,
    action_on_o0,
    centralizer_dims,
    cartan_matrix,
    commutant_dim,
    dynkin_index,
    dynkin_index_trace,
    lie_yamaguti_from_pair,
    principal_coeffs,
    sl2_decompose,
)
from .subalgebras import (
    EXPECTED_DIMS,
    LABELS,
    explicit_presentations,
    h8_generators,
    h8_relations,
    reductive_complement,
    subalgebra,
)


@dataclass
class CheckResult:
    id: str
    paper_ref: str
    status: str
    witness: str | None
    wall_time_ms: int


@dataclass
class Report:
    checks: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.status == "pass" for c in self.checks)

    def to_dict(self):
        return {"checks": [asdict(c) for c in self.checks]}

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False, **kw)

    @classmethod
    def from_dict(cls, data):
        return cls([CheckResult(**c) for c in data["checks"]])

    @classmethod
    def from_json(cls, text: str) -> "Report":
        return cls.from_dict(json.loads(text))

    def render(self) -> str:
        lines = [
            f"{'PASS' if c.status == 'pass' else 'FAIL'}  {c.id}  ({c.wall_time_ms} ms)"
            + (f"  witness: {c.witness}" if c.witness else "")
            for c in self.checks
        ]
        n_fail = sum(c.status != "pass" for c in self.checks)
        lines.append(f"{len(self.checks) - n_fail}/{len(self.checks)} checks passed")
        return "\n".join(lines)


@dataclass(frozen=True)
class Check:
    id: str
    paper_ref: str
    run: object  # callable(seed) -> (ok, witness)


REGISTRY: dict[str, Check] = {}


def check(id_: str, paper_ref: str):
    def deco(fn):
        if id_ in REGISTRY:
            raise ValueError(f"duplicate check id {id_}")
        REGISTRY[id_] = Check(id_, paper_ref, fn)
        return fn

    return deco


def _first_failure(cases, pred):
    for case in cases:
        if not pred(*case):
            return False, repr(case)
    return True, None


# ---------------------------------------------------------------------------
# g2


@check("g2.dim", "dim der(O) = 14")
def _g2_dim(seed):
    g2 = build_g2()
    return g2.dim == 14, None if g2.dim == 14 else f"dim={g2.dim}"


@check("g2.jacobi", "[[x,y],z]+[[y,z],x]+[[z,x],y]=0")
def _g2_jacobi(seed):
    bad = build_g2().jacobi_failures()
    return not bad, repr(bad[:1]) if bad else None


@check("g2.killing_negative_definite", "compact real form: Killing form negative definite")
def _g2_killing(seed):
    g2 = build_g2()
    sig = g2.killing_signature()
    return sig == (0, 14, 0), None if sig == (0, 14, 0) else f"signature={sig}"


@check("g2.D.pointwise_literal", "D_{x,y}(z)=[z,[x,y]]-3(x,z,y)")
def _d_literal(seed):
    b = IMAGINARY_BASIS
    return _first_failure(product(b, b, b), lambda x, y, z: D(x, y).apply(z) == D_pointwise(x, y, z))


@check("g2.D.pointwise_operator_sign", "D_{x,y}=[L_x,L_y]+[L_x,R_y]+[R_x,R_y]")
def _d_operator(seed):
    b = IMAGINARY_BASIS
    return _first_failure(product(b, b, b), lambda x, y, z: D(x, y).apply(z) == -D_pointwise(x, y, z))


# ---------------------------------------------------------------------------
# subalgebras


@check("subalgebras.dims", "dims (6,4,3,4,3,8,3,3)")
def _dims(seed):
    got = tuple(subalgebra(lab).dim for lab in LABELS)
    want = tuple(EXPECTED_DIMS[lab] for lab in LABELS)
    return got == want == (6, 4, 3, 4, 3, 8, 3, 3), None if got == want else repr(got)


@check("subalgebras.closed", "[h,h] ⊆ h")
def _closed(seed):
    for lab in LABELS:
        s = subalgebra(lab)
        g2 = s.g2
        for a in s.coords:
            for b in s.coords:
                if not s.contains(g2.bracket(a, b)):
                    return False, lab
    return True, None


@check("subalgebras.presentations", "explicit generators span the constraint solutions")
def _presentations(seed):
    bad = [lab for lab, (_, ok) in explicit_presentations().items() if not ok]
    return not bad, ", ".join(bad) or None


@check("h8.brackets", "[h,x]=y, [h,y]=-x, [x,y]=8/3h")
def _h8_brackets(seed):
    rel = h8_relations()
    bad = [k for k, ok in rel.items() if not ok]
    return not bad, ", ".join(bad) or None


@check("h8.char_poly", "λ(λ²+1)(λ²+4)(λ²+9)")
def _h8_charpoly(seed):
    from .exact_field import char_poly

    h = h8_generators()[0]
    expect = LAMBDA
    for k in (1, 4, 9):
        expect = expect * (LAMBDA * LAMBDA + UniPoly([k]))
    got = char_poly(h.rows)
    return got == expect, None if got == expect else str(got)


@check("h8.commutant_o0", "O_0 absolutely irreducible: commutant dim 1")
def _h8_comm_o0(seed):
    n = commutant_dim(action_on_o0(subalgebra("h8")))
    return n == 1, None if n == 1 else f"dim={n}"


@check("h8.commutant_complement", "complement absolutely irreducible: commutant dim 1")
def _h8_comm_m(seed):
    n = commutant_dim(action_on_complement(reductive_complement(subalgebra("h8"))))
    return n == 1, None if n == 1 else f"dim={n}"


# ---------------------------------------------------------------------------
# sl2 data

SL2_EXPECT = {
    "h3": ("4V(1) ⊕ V(2) ⊕ 3V(0)", (8, 4)),
    "h5": ("V(2) ⊕ 2V(3) ⊕ 3V(0)", (6, 4)),
    "h7": ("3V(2) ⊕ V(4)", (4, 4)),
    "h8": ("V(2) ⊕ V(10)", (2, 2)),
}
INDEX_EXPECT = {"h3": 1, "h5": 3, "h7": 4, "h8": 28}


def _sl2_check(label):
    def run(seed):
        dec = sl2_decompose(subalgebra(label), "g2")
        got = (str(dec), centralizer_dims(dec))
        return got == SL2_EXPECT[label], None if got == SL2_EXPECT[label] else repr(got)

    return run


def _index_check(label):
    def run(seed):
        s = subalgebra(label)
        a, b = dynkin_index(s), dynkin_index_trace(s)
        ok = a == b == INDEX_EXPECT[label]
        return ok, None if ok else f"weights={a}, trace={b}"

    return run


for _lab in SL2_EXPECT:
    check(f"{_lab}.sl2_decomposition", "V(2)⊕V(10) and the other three lists")(_sl2_check(_lab))
    check(f"{_lab}.dynkin_index", "Dynkin index (1,3,4,28)")(_index_check(_lab))


@check("h8.o0_module", "O_0 = V(6)")
def _h8_o0(seed):
    got = str(sl2_decompose(subalgebra("h8"), "o0"))
    return got == "V(6)", None if got == "V(6)" else got


@check("cartan.principal_coeffs", "2ρ^∨ = (6,10)")
def _coeffs(seed):
    g = principal_coeffs(cartan_matrix("G", 2))
    a = principal_coeffs(cartan_matrix("A", 1))
    ok = g == (6, 10) and a == (1,) and all(c > 0 for c in g)
    return ok, None if ok else f"G2={g}, A1={a}"


# ---------------------------------------------------------------------------
# split form and Lie-Yamaguti


@check("split.jacobi_simple", "V2 ⊕ V10 with transvectant brackets is simple")
def _split(seed):
    from .transvection import build_split_g2

    alg = build_split_g2()
    bad = alg.jacobi_failures()
    if bad:
        return False, repr(bad[:1])
    return alg.is_simple(), None if alg.is_simple() else "not simple"


@check("split.ad_h_spectrum", "[h,X^kY^{10-k}]=(10-2k)X^kY^{10-k}")
def _split_spectrum(seed):
    from .transvection import ad_h_spectrum_ok, build_split_g2

    return ad_h_spectrum_ok(build_split_g2()), None


@check("split.killing_signature", "Killing signature (8,6)")
def _split_sig(seed):
    from .transvection import build_split_g2

    sig = build_split_g2().killing_signature()
    return sig == (8, 6, 0), None if sig == (8, 6, 0) else repr(sig)


@check("split.jacobian_value", "\\frac{5}{252}XY^9\\ne0")
def _split_jac(seed):
    from .transvection import BinaryForm, jacobian_sum

    f1, f2, f3 = BinaryForm.monomial(10, 10), BinaryForm.monomial(10, 0), BinaryForm.monomial(10, 1)
    got = jacobian_sum(f1, f2, f3)
    want = BinaryForm.monomial(10, 1, mpq(5, 252))
    return got == want, None if got == want else repr(got)


@check("ly.v10", "Lie-Yamaguti axioms on V10")
def _ly10(seed):
    from .transvection import ly_axioms_v10

    res = ly_axioms_v10()
    bad = {k: w for k, (ok, w) in res.items() if not ok}
    return not bad, repr(bad) if bad else None


def _ly_pair_check(label):
    def run(seed):
        ly = lie_yamaguti_from_pair(reductive_complement(subalgebra(label)))
        res = ly.check_axioms()
        bad = {k: w for k, (ok, w) in res.items() if not ok}
        if bad:
            return False, repr(bad)
        if label == "h1" and not ly.is_binary_zero():
            return False, "binary product of h1 is not zero"
        return True, None

    return run


for _lab in LABELS:
    check(f"{_lab}.lie_yamaguti", "x·y=π_m[x,y], [x,y,z]=[π_h[x,y],z]")(_ly_pair_check(_lab))


# ---------------------------------------------------------------------------
# homogeneous models


@check("models.cayley_base", "Ω(X_0,X_1,X_2)=0")
def _cayley(seed):
    from .homogeneous import is_cayley_triple

    ok = is_cayley_triple(I, QJ, L) and not is_cayley_triple(I, QJ, NAMED["k"])
    return ok, None


@check("models.coassoc_duality", "Ω(W,W,W)=0")
def _coassoc(seed):
    from .homogeneous import HH, HL, coassoc_duality, quaternion_dual, sample_automorphisms

    if coassoc_duality(HL) != HH:
        return False, "H l"
    for f in sample_automorphisms(seed, 5):
        q = HH.image(f)
        if coassoc_duality(quaternion_dual(q)) != q:
            return False, "round trip"
    return True, None


@check("models.m4_alpha", "(X\\times Y)\\times J(X)=\\alpha J(Y)")
def _alpha(seed):
    from .g2_core import d_left, d_right
    from .homogeneous import HL, m4_alpha, restrict_operator

    jl = NAMED["jl"]
    a = m4_alpha(HL, d_left(I).extend8(), L, jl)
    b = m4_alpha(HL, restrict_operator(d_right(I).extend8(), HL), L, jl)
    return (a, b) == (1, -1), None if (a, b) == (1, -1) else repr((a, b))


@check("models.m4_witness", "(X\\times J(X),X,Y)")
def _m4w(seed):
    from .homogeneous import base_M4, m4_transitivity_witness, sample_automorphisms

    for f in sample_automorphisms(seed, 5):
        m4_transitivity_witness(base_M4().act(f))
    return True, None


@check("models.m5_witness", "(X\\times J(X),X\\times K(X),X)")
def _m5w(seed):
    from .homogeneous import base_M5, m5_witness, sample_automorphisms

    for f in sample_automorphisms(seed, 5):
        m5_witness(base_M5().act(f))
    return True, None


@check("models.subtriple_n", "𝔫=\\span{D_{p,p\\ll}:p∈\\mathbb{H}_0}")
def _n(seed):
    from .homogeneous import subtriple_N

    c = subtriple_N()
    ok = c["dim"] == 5 and c["triple_closed"] and c["inside_odd"] and c["probe_in_n"]
    return ok, None if ok else repr(c)


@check("models.quadric", "z_1^2+\\dots+z_7^2=0")
def _quadric(seed):
    from .homogeneous import HH, in_M2, plane_from_m2, quadric_map, same_oriented_plane

    c = quadric_map(QJ, NAMED["k"])
    p = c["m2_point"]
    ok = c["on_quadric"] and in_M2(p) and p.w == I and p.W == HH
    ok = ok and same_oriented_plane(plane_from_m2(p), (QJ, NAMED["k"]))
    return ok, None if ok else repr(c)


@check("models.projections_equivariant", "f·π(p)=π(f·p)")
def _equiv(seed):
    from .homogeneous import (
        CURATED_TRIPLES,
        PROJECTIONS,
        CayleyTriple,
        projection_equivariant,
        sample_automorphisms,
        source_point,
    )

    fs = sample_automorphisms(seed, 5)
    for name in PROJECTIONS:
        for t in CURATED_TRIPLES[:3]:
            p = source_point(name, CayleyTriple(*t))
            for k, f in enumerate(fs):
                if not projection_equivariant(name, p, f):
                    return False, f"{name}, automorphism #{k}"
    return True, None


@check("models.tangent_iso", "f(\\mathbf{i})\\mathbf{i}+f(\\mathbf{j})\\mathbf{j}+f(\\mathbf{k})\\mathbf{k}=0")
def _tangent(seed):
    from .homogeneous import tangent_model_report

    r = tangent_model_report()
    ok = r["injective"] and r["constraint_holds"] and r["constrained_dim"] == 8 and r["image_is_constrained_space"]
    return ok, None if ok else repr(r)


@check("h8.principal_conjugation_invariant", "M_8 principal subalgebras")
def _principal(seed):
    from .homogeneous import conjugate_subalgebra, is_principal_subalgebra, sample_automorphisms

    h8 = subalgebra("h8")
    f = sample_automorphisms(seed, 5)[-1]
    got = {
        "h8": is_principal_subalgebra(h8),
        "h8^f": is_principal_subalgebra(conjugate_subalgebra(h8, f)),
        **{lab: is_principal_subalgebra(subalgebra(lab)) for lab in ("h3", "h5", "h7")},
    }
    want = {"h8": True, "h8^f": True, "h3": False, "h5": False, "h7": False}
    return got == want, None if got == want else repr(got)


# ---------------------------------------------------------------------------


def select(pattern: str | None = None):
    ids = sorted(REGISTRY)
    if pattern:
        ids = [i for i in ids if fnmatch.fnmatchcase(i, pattern)]
    return [REGISTRY[i] for i in ids]


def run_checks(pattern: str | None = None, seed: int = 0) -> Report:
    """Run the selected checks in id order."""
    report = Report()
    for c in select(pattern):
        random.seed(seed)
        t0 = time.perf_counter()
        try:
            ok, witness = c.run(seed)
        except Exception as exc:  # a raised certificate failure is a failed check
            ok, witness = False, f"{type(exc).__name__}: {exc}"
        ms = int((time.perf_counter() - t0) * 1000)
        report.checks.append(CheckResult(c.id, c.paper_ref, "pass" if ok else "fail", witness, ms))
    return report


__all__ = ["Check", "CheckResult", "Report", "REGISTRY", "check", "select", "run_checks"]
