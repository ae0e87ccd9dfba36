// Embedded sources, continued: dual-bimodule precondition sets and
// matched-pair equation blocks. Reading choices for ambiguously
// parenthesized source lines are noted at the identities they affect.

#include "bihom/builtins.hpp"

namespace bihom::detail {

// Conditions under which transposing the actions of a bimodule again gives
// a bimodule. Map words written before an action composite apply last.
// p8, p10: the final composite of the source repeats one variable and drops
// the other; repaired to the unique reading with matching variables.
extern const char* const kDualPrecondLsDialgebra = R"IDN(
set dual-precondition-of-ls-dialgebra
sort A algebra
sort V module
map alpha1 : A -> A
map alpha2 : A -> A
map beta1 : V -> V
map beta2 : V -> V
prod dl : A, A -> A
prod dr : A, A -> A
act ldl : A on V left
act rdl : A on V right
act ldr : A on V left
act rdr : A on V right

identity p1 over A(x, y), V(u): ldl(y, ldl(alpha1(x), u)) - ldr(y, ldl(alpha1(x), u)) = 0
identity p2 over A(x, y), V(u): beta1(rdl(dl(alpha1(x), y), u)) - beta1(rdl(dr(x, y), u)) = 0
identity p3 over A(x, y), V(u): rdl(y, ldl(alpha1(x), u)) - rdr(y, ldl(alpha1(x), u)) = 0
identity p4 over A(x, y), V(u): beta2(ldr(dr(x, y), u)) - beta2(ldr(dl(x, y), u)) = 0
identity p5 over A(x, y), V(u): rdr(y, rdr(alpha2(x), u)) - rdl(y, rdr(alpha2(x), u)) = 0
identity p6 over A(x, y), V(u): ldr(y, rdl(alpha2(x), u)) - ldl(y, rdr(alpha2(x), u)) = 0
identity p7 over A(x, y), V(u): ldl(alpha1(y), ldl(alpha1.alpha2(x), u)) - beta2(ldl(dl(alpha2(x), alpha1(y)), u)) - ldl(alpha1(x), ldr(alpha1.alpha2(y), u)) + beta2(ldl(dr(alpha2(y), alpha1(x)), u)) = 0
identity p8 over A(x, y), V(u): beta2(beta1(rdl(dl(alpha1(x), y), u))) - beta2(rdl(alpha1(x), rdl(alpha2(y), u))) - rdl(y, beta1(ldr(alpha1.alpha2(x), u))) + beta1(ldr(alpha2(y), rdl(alpha2(x), u))) = 0
identity p9 over A(x, y), V(u): ldr(alpha1(y), ldr(alpha1.alpha2(x), u)) - beta2(ldr(dr(alpha2(x), alpha1(y)), u)) - ldr(alpha1(x), ldr(alpha1.alpha2(y), u)) + beta2(ldr(dr(alpha2(y), alpha1(x)), u)) = 0
identity p10 over A(x, y), V(u): beta2(rdr(dr(alpha1(x), y), beta1(u))) - beta2(rdr(alpha1(x), rdr(alpha2(y), u))) - beta1(rdr(y, ldr(alpha1.alpha2(x), u))) + beta1(ldr(alpha2(y), rdr(alpha2(x), u))) = 0
)IDN";

// p3: the source repeats a variable on one side; repaired to the unique
// matching-variable reading, consistent with the transposed row it mirrors.
extern const char* const kDualPrecondTridendriform = R"IDN(
set dual-precondition-of-bihom-tridendriform
sort A algebra
sort V module
map alpha1 : A -> A
map alpha2 : A -> A
map beta1 : V -> V
map beta2 : V -> V
prod dl : A, A -> A
prod dr : A, A -> A
prod dot : A, A -> A
act ldl : A on V left
act rdl : A on V right
act ldr : A on V left
act rdr : A on V right
act ldot : A on V left
act rdot : A on V right

identity p1 over A(x, y), V(u): beta2(ldl(dl(x, y), u)) - ldl(y, ldl(alpha1(x), u)) - ldr(y, ldl(alpha1(x), u)) - ldot(y, ldl(alpha1(x), u)) = 0
identity p2 over A(x, y), V(u): ldl(y, rdl(alpha2(x), u)) - rdl(x, ldl(alpha1(y), u)) - rdr(x, ldl(alpha1(y), u)) - rdot(x, ldl(alpha1(y), u)) = 0
identity p3 over A(x, y), V(u): rdl(x, rdl(alpha2(y), u)) - beta1(rdl(dl(x, y), u)) - beta1(rdl(dr(x, y), u)) - beta1(rdl(dot(x, y), u)) = 0
identity p4 over A(x, y), V(u): beta2(ldl(dr(x, y), u)) - ldl(y, ldr(alpha1(x), u)) = 0
identity p5 over A(x, y), V(u): ldr(y, rdl(alpha2(x), u)) - rdl(x, ldr(alpha1(y), u)) = 0
identity p6 over A(x, y), V(u): rdr(y, rdl(alpha2(x), u)) - beta1(rdr(dl(y, x), u)) = 0
identity p7 over A(x, y), V(u): beta2(ldr(dl(x, y), u)) + beta2(ldr(dr(x, y), u)) + beta2(ldr(dot(x, y), u)) - ldr(y, ldr(alpha1(x), u)) = 0
identity p8 over A(x, y), V(u): ldl(y, rdr(alpha2(x), u)) + ldr(y, rdr(alpha2(x), u)) + ldot(y, rdr(alpha2(x), u)) - rdr(x, ldr(alpha1(y), u)) = 0
identity p9 over A(x, y), V(u): rdl(y, rdr(alpha2(x), u)) + rdr(y, rdr(alpha2(x), u)) + rdot(y, rdr(alpha2(x), u)) - beta1(rdr(dr(y, x), u)) = 0
identity p10 over A(x, y), V(u): beta2(ldot(dl(x, y), u)) - ldr(y, ldot(alpha1(x), u)) = 0
identity p11 over A(x, y), V(u): ldl(y, rdot(alpha2(x), u)) - rdr(x, ldot(alpha1(y), u)) = 0
identity p12 over A(x, y), V(u): rdl(y, rdot(alpha2(x), u)) - beta1(rdot(dr(y, x), u)) = 0
identity p13 over A(x, y), V(u): beta2(ldot(dr(x, y), u)) - ldot(y, ldr(alpha1(x), u)) = 0
identity p14 over A(x, y), V(u): ldr(y, rdot(alpha2(x), u)) - rdot(x, ldr(alpha1(y), u)) = 0
identity p15 over A(x, y), V(u): rdr(y, rdot(alpha2(x), u)) - beta1(rdr(dot(y, x), u)) = 0
identity p16 over A(x, y), V(u): beta2(ldl(dot(x, y), u)) - ldl(y, ldot(alpha1(x), u)) = 0
identity p17 over A(x, y), V(u): ldot(y, rdl(alpha2(x), u)) - rdl(x, ldot(alpha1(y), u)) = 0
identity p18 over A(x, y), V(u): rdot(y, rdl(alpha2(x), u)) - beta1(rdot(dl(y, x), u)) = 0
identity p19 over A(x, y), V(u): beta2(ldot(dot(x, y), u)) - ldot(y, ldot(alpha1(x), u)) = 0
identity p20 over A(x, y), V(u): ldot(y, rdot(alpha2(x), u)) - rdot(x, ldot(alpha1(y), u)) = 0
identity p21 over A(x, y), V(u): rdot(y, rdot(alpha2(x), u)) - beta1(rdot(dot(y, x), u)) = 0
)IDN";

extern const char* const kMatchedAssociative = R"IDN(
set matched-pair-of-bihom-associative
sort A algebra
sort B algebra
map alpha1 : A -> A
map alpha2 : A -> A
map beta1 : B -> B
map beta2 : B -> B
prod mulA : A, A -> A
prod mulB : B, B -> B
act lA : A on B left
act rA : A on B right
act lB : B on A left
act rB : B on A right

identity m1 over A(x), B(a, b): lA(alpha1(x), mulB(a, b)) - lA(rB(a, x), beta2(b)) - mulB(lA(x, a), beta2(b)) = 0
identity m2 over A(x), B(a, b): rA(alpha2(x), mulB(a, b)) - rA(lB(b, x), beta1(a)) - mulB(beta1(a), rA(x, b)) = 0
identity m3 over A(x), B(a, b): lA(lB(a, x), beta2(b)) + mulB(rA(x, a), beta2(b)) - rA(rB(b, x), beta1(a)) - mulB(beta1(a), lA(x, b)) = 0
identity m4 over A(x, y), B(a): lB(beta1(a), mulA(x, y)) - lB(rA(x, a), alpha2(y)) - mulA(lB(a, x), alpha2(y)) = 0
identity m5 over A(x, y), B(a): rB(beta2(a), mulA(x, y)) - rB(lA(y, a), alpha1(x)) - mulA(alpha1(x), rB(a, y)) = 0
identity m6 over A(x, y), B(a): lB(lA(x, a), alpha2(y)) + mulA(rB(a, x), alpha2(y)) - rB(rA(y, a), alpha1(x)) - mulA(alpha1(x), lB(a, y)) = 0
)IDN";

// The bracket and rho abbreviations of the source are expanded into
// primitive action terms here; the expansion is the one stated alongside
// the hypotheses ({u,v} = u*v - v*u, rho = l - r with the displayed maps).
extern const char* const kMatchedLeftSymmetric = R"IDN(
set matched-pair-of-bihom-left-symmetric
sort A algebra
sort B algebra
map alpha1 : A -> A
map alpha2 : A -> A
map beta1 : B -> B
map beta2 : B -> B
prod mulA : A, A -> A
prod mulB : B, B -> B
act lA : A on B left
act rA : A on B right
act lB : B on A left
act rB : B on A right

identity m1 over A(x), B(a, b): rA(alpha2(x), mulB(beta2(a), beta1(b))) - rA(alpha2(x), mulB(beta2(b), beta1(a))) - rA(lB(beta1(b), x), beta1.beta2(a)) + rA(lB(beta1(a), x), beta1.beta2(b)) - mulB(beta1.beta2(a), rA(x, beta1(b))) + mulB(beta1.beta2(b), rA(x, beta1(a))) = 0
identity m2 over A(x), B(a, b): lA(alpha1.alpha2(x), mulB(beta1(a), b)) - mulB(lA(alpha2(x), beta1(a)), beta2(b)) + mulB(rA(alpha1(x), beta2(a)), beta2(b)) + lA(lB(beta2(a), alpha1(x)), beta2(b)) - lA(rB(beta1(a), alpha2(x)), beta2(b)) - mulB(beta1.beta2(a), lA(alpha1(x), b)) - rA(rB(b, alpha1(x)), beta1.beta2(a)) = 0
identity m3 over A(x, y), B(a): rB(beta2(a), mulA(alpha2(x), alpha1(y))) - rB(beta2(a), mulA(alpha2(y), alpha1(x))) - rB(lA(alpha1(y), a), alpha1.alpha2(x)) + rB(lA(alpha1(x), a), alpha1.alpha2(y)) - mulA(alpha1.alpha2(x), rB(a, alpha1(y))) + mulA(alpha1.alpha2(y), rB(a, alpha1(x))) = 0
identity m4 over A(x, y), B(a): lB(beta1.beta2(a), mulA(alpha1(x), y)) - mulA(lB(beta2(a), alpha1(x)), alpha2(y)) + mulA(rB(beta1(a), alpha2(x)), alpha2(y)) + lB(lA(alpha2(x), beta1(a)), alpha2(y)) - lB(rA(alpha1(x), beta2(a)), alpha2(y)) - mulA(alpha1.alpha2(x), lB(beta1(a), y)) - rB(rA(y, beta1(a)), alpha1.alpha2(x)) = 0
)IDN";

// Forced repairs, present in both variants because the printed lines are
// not well-sorted: m4 and m16 use a bare undeclared map on the wrong sort
// (read as the second twisting map of the proper side), m7 applies a
// base-sort map to the other constituent (read as the mirrored map), m17
// carries a repeated element inside an action argument (read as the
// mirrored row m5), m20 has a two-letter juxtaposition inside a map
// argument (read as the single element), and the final composites of m8,
// m11, m20 and m23 are garbled application orders (read with the action
// applied to the twisted element, matching their well-sorted siblings).
extern const char* const kMatchedLsDialgebra = R"IDN(
set matched-pair-of-ls-dialgebra
sort A algebra
sort B algebra
map alpha1 : A -> A
map alpha2 : A -> A
map beta1 : B -> B
map beta2 : B -> B
prod dlA : A, A -> A
prod drA : A, A -> A
prod dlB : B, B -> B
prod drB : B, B -> B
act ldlA : A on B left
act rdlA : A on B right
act ldrA : A on B left
act rdrA : A on B right
act ldlB : B on A left
act rdlB : B on A right
act ldrB : B on A left
act rdrB : B on A right

identity m1 over A(x), B(a, b): ldlA(alpha1(x), dlB(a, b)) - ldlA(alpha1(x), drB(a, b)) = 0
identity m2 over A(x), B(a, b): rdlA(rdlB(b, x), beta1(a)) + dlB(beta1(a), ldlA(x, b)) - rdlA(rdrB(b, x), beta1(a)) - dlB(beta1(a), ldrA(x, b)) = 0
identity m3 over A(x), B(a, b): rdlA(ldlB(b, x), beta1(a)) + dlB(beta1(a), rdlA(x, b)) - rdlA(ldrB(b, x), beta1(a)) - dlB(beta1(a), rdrA(x, b)) = 0
identity m4 over A(x), B(a, b): rdrA(alpha2(x), drB(a, b)) - rdlA(alpha2(x), dlB(a, b)) = 0
identity m5 over A(x), B(a, b): ldrA(rdrB(a, x), beta2(b)) + drB(ldrA(x, a), beta2(b)) - ldrA(rdlB(a, x), beta2(b)) - drB(ldlA(x, a), beta2(b)) = 0
identity m6 over A(x), B(a, b): ldrA(ldlB(a, x), beta2(b)) + drB(rdrA(x, a), beta2(b)) - ldrA(ldlB(a, x), beta2(b)) - drB(rdlA(x, a), beta2(b)) = 0
identity m7 over A(x), B(a, b): ldlA(alpha1.alpha2(x), dlB(beta1(a), b)) - ldlA(rdlB(beta1(a), alpha2(x)), beta2(b)) - dlB(ldlA(alpha1(x), beta1(a)), beta2(b)) - drB(beta1.beta2(a), ldlA(alpha1(x), b)) - rdrA(rdlB(b, alpha1(x)), beta1.beta2(a)) + dlB(rdrA(alpha1(x), beta2(a)), beta2(b)) + ldlA(ldrB(beta2(a), alpha1(x)), beta2(b)) = 0
identity m8 over A(x), B(a, b): dlB(beta1.beta2(a), ldlA(alpha1(x), b)) + rdlA(rdlB(b, alpha1(x)), beta1.beta2(a)) - dlB(rdlA(alpha1(x), beta2(a)), beta2(b)) - ldrA(alpha1.alpha2(x), dlB(beta2(a), b)) + dlB(ldrA(alpha2(x), beta2(a)), beta2(b)) + ldlA(ldrB(beta2(a), alpha2(x)), beta2(b)) = 0
identity m9 over A(x), B(a, b): dlB(beta1.beta2(a), rdlA(x, beta2(b))) + rdlA(ldlB(beta2(b), x), beta1.beta2(a)) - rdlA(alpha2(x), dlB(beta2(a), beta1(b))) - drB(beta1.beta2(b), rdlA(x, beta1(a))) - rdrA(ldlB(beta1(a), x), beta1.beta2(b)) + rdlA(alpha2(x), drB(beta2(b), beta1(a))) = 0
identity m10 over A(x), B(a, b): ldrA(alpha1.alpha2(x), drB(beta1(a), b)) - ldrA(rdrB(beta1(a), alpha2(x)), beta2(b)) - drB(ldrA(alpha2(x), beta1(a)), beta2(b)) - drB(beta1.beta2(a), ldrA(alpha1(x), b)) - rdrA(rdrB(b, alpha1(x)), beta1.beta2(a)) + drB(rdrA(alpha1(x), beta2(a)), beta2(b)) + ldrA(ldrB(beta2(a), alpha1(x)), beta2(b)) = 0
identity m11 over A(x), B(a, b): drB(beta1.beta2(a), ldrA(alpha1(x), b)) + rdrA(rdrB(b, alpha1(x)), beta1.beta2(a)) - drB(rdrA(alpha1(x), beta2(a)), beta2(b)) - ldrA(alpha1.alpha2(x), drB(beta2(a), b)) + drB(ldrA(alpha2(x), beta2(a)), beta2(b)) + ldrA(ldrB(beta2(a), alpha2(x)), beta2(b)) = 0
identity m12 over A(x), B(a, b): drB(beta1.beta2(a), rdrA(x, beta2(b))) + rdrA(ldrB(beta2(b), x), beta1.beta2(a)) - rdrA(alpha2(x), drB(beta2(a), beta1(b))) - drB(beta1.beta2(b), rdrA(x, beta1(a))) - rdrA(ldrB(beta1(a), x), beta1.beta2(b)) + rdrA(alpha2(x), drB(beta2(b), beta1(a))) = 0
identity m13 over A(x, y), B(a): ldlB(beta1(a), dlA(x, y)) - ldlB(beta1(a), drA(x, y)) = 0
identity m14 over A(x, y), B(a): rdlB(rdlA(y, a), alpha1(x)) + dlA(alpha1(x), ldlB(a, y)) - rdlB(rdrA(y, a), alpha1(x)) - dlA(alpha1(x), ldrB(a, y)) = 0
identity m15 over A(x, y), B(a): rdlB(ldlA(y, a), alpha1(x)) + dlA(alpha1(x), rdlB(a, y)) - rdlB(ldrA(y, a), alpha1(x)) - dlA(alpha1(x), rdrB(a, y)) = 0
identity m16 over A(x, y), B(a): rdrB(beta2(a), drA(x, y)) - rdlB(beta2(a), dlA(x, y)) = 0
identity m17 over A(x, y), B(a): ldrB(rdrA(x, a), alpha2(y)) + drA(ldrB(a, x), alpha2(y)) - ldrB(rdlA(x, a), alpha2(y)) - drA(ldlB(a, x), alpha2(y)) = 0
identity m18 over A(x, y), B(a): ldrB(ldlA(x, a), alpha2(y)) + drA(rdrB(a, x), alpha2(y)) - ldrB(ldlA(x, a), alpha2(y)) - drA(rdlB(a, x), alpha2(y)) = 0
identity m19 over A(x, y), B(a): ldlB(beta1.beta2(a), dlA(alpha1(x), y)) - ldlB(rdlA(alpha1(x), beta2(a)), alpha2(y)) - dlA(ldlB(beta1(a), alpha1(x)), alpha2(y)) - drA(alpha1.alpha2(x), ldlB(beta1(a), y)) - rdrB(rdlA(y, beta1(a)), alpha1.alpha2(x)) + dlA(rdrB(beta1(a), alpha2(x)), alpha2(y)) + ldlB(ldrA(alpha2(x), beta1(a)), alpha2(y)) = 0
identity m20 over A(x, y), B(a): dlA(alpha1.alpha2(x), ldlB(beta1(a), y)) + rdlB(rdlA(y, beta1(a)), alpha1.alpha2(x)) - dlA(rdlB(beta1(a), alpha2(x)), alpha2(y)) - ldrB(beta1.beta2(a), dlA(alpha2(x), y)) + dlA(ldrB(beta2(a), alpha2(x)), alpha2(y)) + ldlB(ldrA(alpha2(x), beta2(a)), alpha2(y)) = 0
identity m21 over A(x, y), B(a): dlA(alpha1.alpha2(x), rdlB(a, alpha2(y))) + rdlB(ldlA(alpha2(y), a), alpha1.alpha2(x)) - rdlB(beta2(a), dlA(alpha2(x), alpha1(y))) - drA(alpha1.alpha2(y), rdlB(a, alpha1(x))) - rdrB(ldlA(alpha1(x), a), alpha1.alpha2(y)) + rdlB(beta2(a), drA(alpha2(y), alpha1(x))) = 0
identity m22 over A(x, y), B(a): ldrB(beta1.beta2(a), drA(alpha1(x), y)) - ldrB(rdrA(alpha1(x), beta2(a)), alpha2(y)) - drA(ldrB(beta2(a), alpha1(x)), alpha2(y)) - drA(alpha1.alpha2(x), ldrB(beta1(a), y)) - rdrB(rdrA(y, beta1(a)), alpha1.alpha2(x)) + drA(rdrB(beta1(a), alpha2(x)), alpha2(y)) + ldrB(ldrA(alpha2(x), beta1(a)), alpha2(y)) = 0
identity m23 over A(x, y), B(a): drA(alpha1.alpha2(x), ldrB(beta1(a), y)) + rdrB(rdrA(y, beta1(a)), alpha1.alpha2(x)) - drA(rdrB(beta1(a), alpha2(x)), alpha2(y)) - ldrB(beta1.beta2(a), drA(alpha2(x), y)) + drA(ldrB(beta2(a), alpha2(x)), alpha2(y)) + ldrB(ldrA(alpha2(x), beta2(a)), alpha2(y)) = 0
identity m24 over A(x, y), B(a): drA(alpha1.alpha2(x), rdrB(a, alpha2(y))) + rdrB(ldrA(alpha2(y), a), alpha1.alpha2(x)) - rdrB(beta2(a), drA(alpha2(x), alpha1(y))) - drA(alpha1.alpha2(y), rdrB(a, alpha1(x))) - rdrB(ldrA(alpha1(x), a), alpha1.alpha2(y)) + rdrB(beta2(a), drA(alpha2(y), alpha1(x))) = 0
)IDN";

// m17/m20/m23/m26/m29 as printed use a product of the wrong side on
// mixed-sort arguments; repaired to the matching-side product (forced).
extern const char* const kMatchedAssocDialgebra = R"IDN(
set matched-pair-of-assoc-dialgebra
sort A algebra
sort B algebra
map alpha1 : A -> A
map alpha2 : A -> A
map beta1 : B -> B
map beta2 : B -> B
prod dlA : A, A -> A
prod drA : A, A -> A
prod dlB : B, B -> B
prod drB : B, B -> B
act ldlA : A on B left
act rdlA : A on B right
act ldrA : A on B left
act rdrA : A on B right
act ldlB : B on A left
act rdlB : B on A right
act ldrB : B on A left
act rdrB : B on A right

identity m1 over A(x), B(a, b): rdlA(alpha2(x), drB(a, b)) - rdrA(ldlB(b, x), beta1(a)) - drB(beta1(a), rdlA(x, b)) = 0
identity m2 over A(x), B(a, b): ldlA(ldrB(a, x), beta2(b)) + dlB(rdrA(x, a), beta2(b)) - drB(beta1(a), ldlA(x, b)) - rdrA(rdlB(b, x), beta1(a)) = 0
identity m3 over A(x), B(a, b): ldlA(alpha1(x), dlB(a, b)) - dlB(ldrA(x, a), beta2(b)) - ldlA(rdrB(a, x), beta2(b)) = 0
identity m4 over A(x), B(a, b): rdlA(alpha2(x), dlB(a, b)) - rdlA(ldlB(b, x), beta1(a)) - dlB(beta1(a), rdlA(x, b)) = 0
identity m5 over A(x), B(a, b): ldlA(ldlB(a, x), beta2(b)) + dlB(rdlA(x, a), beta2(b)) - dlB(beta1(a), ldlA(x, b)) - rdlA(rdlB(b, x), beta1(a)) = 0
identity m6 over A(x), B(a, b): ldlA(alpha1(x), dlB(a, b)) - dlB(ldlA(x, a), beta2(b)) - ldlA(rdlB(a, x), beta2(b)) = 0
identity m7 over A(x), B(a, b): rdlA(alpha2(x), dlB(a, b)) - rdlA(ldrB(b, x), beta1(a)) - dlB(beta1(a), rdrA(x, b)) = 0
identity m8 over A(x), B(a, b): ldlA(ldlB(a, x), beta2(b)) + dlB(rdlA(x, a), beta2(b)) - dlB(beta1(a), ldrA(x, b)) - rdlA(rdrB(b, x), beta1(a)) = 0
identity m9 over A(x), B(a, b): ldlA(alpha1(x), drB(a, b)) - dlB(ldlA(x, a), beta2(b)) - ldlA(rdlB(a, x), beta2(b)) = 0
identity m10 over A(x), B(a, b): rdrA(alpha2(x), drB(a, b)) - rdrA(ldrB(b, x), beta1(a)) - drB(beta1(a), rdrA(x, b)) = 0
identity m11 over A(x), B(a, b): ldrA(ldrB(a, x), beta2(b)) + drB(rdrA(x, a), beta2(b)) - drB(beta1(a), ldrA(x, b)) - rdrA(rdrB(b, x), beta1(a)) = 0
identity m12 over A(x), B(a, b): ldrA(alpha1(x), drB(a, b)) - drB(ldrA(x, a), beta2(b)) - ldrA(rdrB(a, x), beta2(b)) = 0
identity m13 over A(x), B(a, b): rdrA(alpha2(x), dlB(a, b)) - rdrA(ldrB(b, x), beta1(a)) - drB(beta1(a), rdrA(x, b)) = 0
identity m14 over A(x), B(a, b): ldrA(ldlB(a, x), beta2(b)) + drB(rdlA(x, a), beta2(b)) - drB(beta1(a), ldrA(x, b)) - rdrA(rdrB(b, x), beta1(a)) = 0
identity m15 over A(x), B(a, b): ldrA(alpha1(x), drB(a, b)) - drB(ldlA(x, a), beta2(b)) - ldrA(rdlB(a, x), beta2(b)) = 0
identity m16 over A(x, y), B(a): rdlB(beta2(a), drA(x, y)) - rdrB(ldlA(y, a), alpha1(x)) - drA(alpha1(x), rdlB(a, y)) = 0
identity m17 over A(x, y), B(a): ldlB(ldrA(x, a), alpha2(y)) + dlA(rdrB(a, x), alpha2(y)) - drA(alpha1(x), ldlB(a, y)) - rdrB(rdlA(y, a), alpha1(x)) = 0
identity m18 over A(x, y), B(a): ldlB(beta1(a), dlA(x, y)) - dlA(ldrB(a, x), alpha2(y)) - ldlB(rdrA(x, a), alpha2(y)) = 0
identity m19 over A(x, y), B(a): rdlB(beta2(a), dlA(x, y)) - rdlB(ldlA(y, a), alpha1(x)) - dlA(alpha1(x), rdlB(a, y)) = 0
identity m20 over A(x, y), B(a): ldlB(ldlA(x, a), alpha2(y)) + dlA(rdlB(a, x), alpha2(y)) - dlA(alpha1(x), ldlB(a, y)) - rdlB(rdlA(y, a), alpha1(x)) = 0
identity m21 over A(x, y), B(a): ldlB(beta1(a), dlA(x, y)) - dlA(ldlB(a, x), alpha2(y)) - ldlB(rdlA(x, a), alpha2(y)) = 0
identity m22 over A(x, y), B(a): rdlB(beta2(a), dlA(x, y)) - rdlB(ldrA(y, a), alpha1(x)) - dlA(alpha1(x), rdrB(a, y)) = 0
identity m23 over A(x, y), B(a): ldlB(ldlA(x, a), alpha2(y)) + dlA(rdlB(a, x), alpha2(y)) - dlA(alpha1(x), ldrB(a, y)) - rdlB(rdrA(y, a), alpha1(x)) = 0
identity m24 over A(x, y), B(a): ldlB(beta1(a), drA(x, y)) - dlA(ldlB(a, x), alpha2(y)) - ldlB(rdlA(x, a), alpha2(y)) = 0
identity m25 over A(x, y), B(a): rdrB(beta2(a), drA(x, y)) - rdrB(ldrA(y, a), alpha1(x)) - drA(alpha1(x), rdrB(a, y)) = 0
identity m26 over A(x, y), B(a): ldrB(ldrA(x, a), alpha2(y)) + drA(rdrB(a, x), alpha2(y)) - drA(alpha1(x), ldrB(a, y)) - rdrB(rdrA(y, a), alpha1(x)) = 0
identity m27 over A(x, y), B(a): ldrB(beta1(a), drA(x, y)) - drA(ldrB(a, x), alpha2(y)) - ldrB(rdrA(x, a), alpha2(y)) = 0
identity m28 over A(x, y), B(a): rdrB(beta2(a), dlA(x, y)) - rdrB(ldrA(y, a), alpha1(x)) - drA(alpha1(x), rdrB(a, y)) = 0
identity m29 over A(x, y), B(a): ldrB(ldlA(x, a), alpha2(y)) + drA(rdlB(a, x), alpha2(y)) - drA(alpha1(x), ldrB(a, y)) - rdrB(rdrA(y, a), alpha1(x)) = 0
identity m30 over A(x, y), B(a): ldrB(beta1(a), drA(x, y)) - drA(ldlB(a, x), alpha2(y)) - ldrB(rdlA(x, a), alpha2(y)) = 0
)IDN";

}  // namespace bihom::detail
