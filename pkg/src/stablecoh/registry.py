"""Citation tags carried by every reported value.

Each tag names one stated result; ``STATUS`` says whether it is proved
("theorem"), conjectural ("conjecture") or a plain computation.
"""

CITATIONS: dict[str, str] = {
    "mixed-tensor-decomposition": "H^{p,q} decomposed through its traceless parts and the contraction filtration",
    "aut-h1-irreducible": "H^1(Aut(F_n), V) for irreducible algebraic V: Q for V_{1,0} and V_{1^2,1}, else 0",
    "out-h1-irreducible": "H^1(Out(F_n), V) for irreducible algebraic V: Q for V_{1^2,1}, else 0",
    "aut-h1-tensor": "H^1(Aut(F_n), H^{q+1,q}) = Q^{(q+2)!/2}; zero when p-q != 1",
    "out-h1-tensor": "H^1(Out(F_n), H^{q+1,q}) = Q^{binom(q+1,2) q!}; zero when p-q != 1",
    "aut-h1-module-vanishing": "H^1(Aut(F_n), M) = 0 for polynomial modules without V_{1,0} or V_{1^2,1} factors",
    "out-h1-module-vanishing": "H^1(Out(F_n), M) = 0 for polynomial modules without V_{1^2,1} factors",
    "aut-tensor-vanishing-line": "H^i(Aut(F_n), H^{p,q}) = 0 stably when i != p-q",
    "wheeled-prop-degree-one": "degree-one wheeled PROP value (q+2)!/2",
    "albanese-tensor-surrogate": "((W_i)^* tensor H^{p,q})^GL as a stand-in for the wheeled PROP value",
    "aut-h2-reduction": "H^2(Aut(F_n), V) = (H^2(IA_n) tensor V)^GL for nontrivial V, n >= 5",
    "ia-h2-invariants-vanish": "H^2(IA_n, Q)^GL = H^2(IO_n, Q)^GL = 0 for n >= 4",
    "out-top-tensor-cohomology": "H^q(Out(F_n), H^{tensor q}) counted by set partitions without singletons",
    "gl-stable-cohomology": "stable H^*(GL(n,Z), Q) = exterior algebra on x_i, deg 4i+1",
    "sp-stable-cohomology": "stable H^*(Sp(2g,Z), Q) = Q[u_i], deg 4i-2",
    "mcg-stable-cohomology": "stable H^*(mapping class group, Q) = Q[e_i], deg 2i",
    "ia-invariants-conjecture": "stable H^*(IA_n, Q)^GL = Q[z_i], deg 4i",
    "ia-invariants-conditional": "Q[y_i], deg 4i, from the Borel classes under the stable-family hypothesis",
    "io-invariants-conjecture": "stable H^*(IO_n, Q)^GL = Q[z_i], deg 4i",
    "torelli-invariants-conjecture": "stable H^*(Torelli, Q)^Sp = Q[e_2, e_4, ...], deg 4i",
    "albanese-ia-conjecture": "stable Albanese homology of IA_n is W_i",
    "albanese-io-conjecture": "stable Albanese homology of IO_n is W^O_i",
    "ia-cohomology-conjecture": "stable H^*(IA_n, Q) = (W_*)^* tensor Q[z_i]",
    "io-cohomology-conjecture": "stable H^*(IO_n, Q) = (W^O_*)^* tensor Q[z_i]",
    "ia-io-factorization": "gr H^*(IA_n) = H^*(IO_n) tensor H^*(F_n)",
    "koszul-exactness": "exactness of the Koszul complex S^i(V[-1]) -> ... -> S^i(V)",
    "ia-h1": "H^1(IA_n, Q) = V_{0,1} + V_{1,1^2}",
    "computation": "direct computation, no external claim",
}

STATUS: dict[str, str] = {tag: "theorem" for tag in CITATIONS}
STATUS.update({
    "albanese-tensor-surrogate": "conjecture",
    "ia-invariants-conjecture": "conjecture",
    "io-invariants-conjecture": "conjecture",
    "torelli-invariants-conjecture": "conjecture",
    "albanese-ia-conjecture": "conjecture",
    "albanese-io-conjecture": "conjecture",
    "ia-cohomology-conjecture": "conjecture",
    "io-cohomology-conjecture": "conjecture",
    "ia-invariants-conditional": "conjecture",
    "computation": "computation",
})


def status_of(tag: str) -> str:
    if tag not in CITATIONS:
        raise KeyError(f"unknown citation tag {tag!r}")
    return STATUS[tag]
