// Embedded sources, continued: dendriform and tridendriform matched-pair
// blocks, and the corrected sibling of the dialgebra block. Summed actions
// and products of the sources (l = l-dl + l-dr [+ l-dot], likewise r and
// the total product) are expanded term by term.

#include "bihom/builtins.hpp"

namespace bihom::detail {

// The corrected variant repairs the one row whose head action contradicts
// the structural axiom it restates (m3, left head).
extern const char* const kMatchedAssocDialgebraCorrected = R"IDN(
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
identity m3 over A(x), B(a, b): ldrA(alpha1(x), dlB(a, b)) - dlB(ldrA(x, a), beta2(b)) - ldlA(rdrB(a, x), beta2(b)) = 0
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

// m1, m2, m3 and m13 carry forced repairs of garbled composites in the
// source (an action applied to an element of the wrong sort, or a dangling
// operator); the repaired reading follows the mirrored B-side row.
extern const char* const kMatchedDendriform = R"IDN(
set matched-pair-of-bihom-dendriform
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

identity m1 over A(x), B(a, b): rdlA(alpha2(x), dlB(a, b)) - dlB(beta1(a), rdlA(x, b)) - dlB(beta1(a), rdrA(x, b)) - rdlA(ldlB(b, x), beta1(a)) - rdlA(ldrB(b, x), beta1(a)) = 0
identity m2 over A(x), B(a, b): ldlA(ldlB(a, x), beta2(b)) + dlB(rdlA(x, a), beta2(b)) - dlB(beta1(a), ldlA(x, b)) - rdlA(rdlB(b, x), beta1(a)) = 0
identity m3 over A(x), B(a, b): ldlA(alpha1(x), dlB(a, b)) + ldlA(alpha1(x), drB(a, b)) - dlB(ldlA(x, a), beta2(b)) - drB(ldlA(x, a), beta2(b)) - ldlA(rdlB(a, x), beta2(b)) = 0
identity m4 over A(x), B(a, b): rdlA(alpha2(x), drB(a, b)) - rdrA(ldlB(b, x), beta1(a)) - drB(beta1(a), rdlA(x, b)) = 0
identity m5 over A(x), B(a, b): ldlA(ldrB(a, x), beta2(b)) + dlB(rdrA(x, a), beta2(b)) - drB(beta1(a), ldlA(x, b)) - rdrA(rdlB(b, x), beta1(a)) = 0
identity m6 over A(x), B(a, b): ldrA(alpha1(x), dlB(a, b)) - dlB(ldrA(x, a), beta2(b)) - ldlA(rdrB(a, x), beta2(b)) = 0
identity m7 over A(x), B(a, b): rdrA(alpha2(x), dlB(a, b)) + rdrA(alpha2(x), drB(a, b)) - drB(beta1(a), rdrA(x, b)) - rdrA(ldrB(b, x), beta1(a)) = 0
identity m8 over A(x), B(a, b): drB(beta1(a), ldrA(x, b)) + rdrA(rdrB(b, x), beta1(a)) - ldrA(ldlB(a, x), beta2(b)) - ldrA(ldrB(a, x), beta2(b)) - drB(rdlA(x, a), beta2(b)) - drB(rdrA(x, a), beta2(b)) = 0
identity m9 over A(x), B(a, b): ldrA(alpha1(x), drB(a, b)) - drB(ldlA(x, a), beta2(b)) - drB(ldrA(x, a), beta2(b)) - ldrA(rdlB(a, x), beta2(b)) - ldrA(rdrB(a, x), beta2(b)) = 0
identity m10 over A(x, y), B(a): rdlB(beta2(a), dlA(x, y)) - dlA(alpha1(x), rdlB(a, y)) - dlA(alpha1(x), rdrB(a, y)) - rdlB(ldlA(y, a), alpha1(x)) - rdlB(ldrA(y, a), alpha1(x)) = 0
identity m11 over A(x, y), B(a): ldlB(ldlA(x, a), alpha2(y)) + dlA(rdlB(a, x), alpha2(y)) - dlA(alpha1(x), ldlB(a, y)) - dlA(alpha1(x), ldrB(a, y)) - rdlB(rdlA(y, a), alpha1(x)) - rdlB(rdrA(y, a), alpha1(x)) = 0
identity m12 over A(x, y), B(a): ldlB(beta1(a), dlA(x, y)) + ldlB(beta1(a), drA(x, y)) - dlA(ldlB(a, x), alpha2(y)) - ldlB(rdlA(x, a), alpha2(y)) = 0
identity m13 over A(x, y), B(a): rdlB(beta2(a), drA(x, y)) - rdrB(ldlA(y, a), alpha1(x)) - drA(alpha1(x), rdlB(a, y)) = 0
identity m14 over A(x, y), B(a): ldlB(ldrA(x, a), alpha2(y)) + dlA(rdrB(a, x), alpha2(y)) - drA(alpha1(x), ldlB(a, y)) - rdrB(rdlA(y, a), alpha1(x)) = 0
identity m15 over A(x, y), B(a): ldrB(beta1(a), dlA(x, y)) - dlA(ldrB(a, x), alpha2(y)) - ldlB(rdrA(x, a), alpha2(y)) = 0
identity m16 over A(x, y), B(a): rdrB(beta2(a), dlA(x, y)) + rdrB(beta2(a), drA(x, y)) - drA(alpha1(x), rdrB(a, y)) - rdrB(ldrA(y, a), alpha1(x)) = 0
identity m17 over A(x, y), B(a): drA(alpha1(x), ldrB(a, y)) + rdrB(rdrA(y, a), alpha1(x)) - ldrB(ldlA(x, a), alpha2(y)) - ldrB(ldrA(x, a), alpha2(y)) - drA(rdlB(a, x), alpha2(y)) - drA(rdrB(a, x), alpha2(y)) = 0
identity m18 over A(x, y), B(a): ldrB(beta1(a), drA(x, y)) - drA(ldlB(a, x), alpha2(y)) - drA(ldrB(a, x), alpha2(y)) - ldrB(rdlA(x, a), alpha2(y)) - ldrB(rdrA(x, a), alpha2(y)) = 0
)IDN";

// Summed-action composites expand to nine terms where both factors are
// sums. m1, m8, m22, m29, m31 and m42 carry forced repairs of garbled or
// wrong-sort composites, following the mirrored row; the mixed-sort product
// subscripts of m23, m26, m29, m32, m35, m38 and m41 are read on the
// matching side.
extern const char* const kMatchedTridendriform = R"IDN(
set matched-pair-of-bihom-tridendriform
sort A algebra
sort B algebra
map alpha1 : A -> A
map alpha2 : A -> A
map beta1 : B -> B
map beta2 : B -> B
prod dlA : A, A -> A
prod drA : A, A -> A
prod dotA : A, A -> A
prod dlB : B, B -> B
prod drB : B, B -> B
prod dotB : B, B -> B
act ldlA : A on B left
act rdlA : A on B right
act ldrA : A on B left
act rdrA : A on B right
act ldotA : A on B left
act rdotA : A on B right
act ldlB : B on A left
act rdlB : B on A right
act ldrB : B on A left
act rdrB : B on A right
act ldotB : B on A left
act rdotB : B on A right

identity m1 over A(x), B(a, b): rdlA(alpha2(x), dlB(a, b)) - rdlA(ldlB(b, x), beta1(a)) - rdlA(ldrB(b, x), beta1(a)) - rdlA(ldotB(b, x), beta1(a)) - rdrA(ldlB(b, x), beta1(a)) - rdrA(ldrB(b, x), beta1(a)) - rdrA(ldotB(b, x), beta1(a)) - rdotA(ldlB(b, x), beta1(a)) - rdotA(ldrB(b, x), beta1(a)) - rdotA(ldotB(b, x), beta1(a)) - dlB(beta1(a), rdlA(x, b)) = 0
identity m2 over A(x), B(a, b): ldlA(ldlB(a, x), beta2(b)) + dlB(rdlA(x, a), beta2(b)) - dlB(beta1(a), ldlA(x, b)) - rdlA(rdlB(b, x), beta1(a)) = 0
identity m3 over A(x), B(a, b): ldlA(alpha1(x), dlB(a, b)) + ldlA(alpha1(x), drB(a, b)) + ldlA(alpha1(x), dotB(a, b)) - dlB(ldlA(x, a), beta2(b)) - drB(ldlA(x, a), beta2(b)) - dotB(ldlA(x, a), beta2(b)) - ldlA(rdlB(a, x), beta2(b)) = 0
identity m4 over A(x), B(a, b): rdlA(alpha2(x), drB(a, b)) - rdrA(ldlB(b, x), beta1(a)) - drB(beta1(a), rdlA(x, b)) = 0
identity m5 over A(x), B(a, b): ldlA(ldrB(a, x), beta2(b)) + dlB(rdrA(x, a), beta2(b)) - drB(beta1(a), ldlA(x, b)) - rdrA(rdlB(b, x), beta1(a)) = 0
identity m6 over A(x), B(a, b): ldlA(alpha1(x), dlB(a, b)) - dlB(ldrA(x, a), beta2(b)) - ldlA(rdrB(a, x), beta2(b)) = 0
identity m7 over A(x), B(a, b): rdrA(alpha2(x), dlB(a, b)) + rdrA(alpha2(x), drB(a, b)) + rdrA(alpha2(x), dotB(a, b)) - rdrA(ldrB(b, x), beta1(a)) - drB(beta1(a), rdrA(x, b)) = 0
identity m8 over A(x), B(a, b): ldrA(ldlB(a, x), beta2(b)) + ldrA(ldrB(a, x), beta2(b)) + ldrA(ldotB(a, x), beta2(b)) + drB(rdlA(x, a), beta2(b)) + drB(rdrA(x, a), beta2(b)) + drB(rdotA(x, a), beta2(b)) - drB(beta1(a), ldrA(x, b)) - rdrA(rdrB(b, x), beta1(a)) = 0
identity m9 over A(x), B(a, b): ldrA(alpha1(x), drB(a, b)) - drB(ldrA(x, a), beta2(b)) - ldlA(rdlB(a, x), beta2(b)) - ldlA(rdrB(a, x), beta2(b)) - ldlA(rdotB(a, x), beta2(b)) - ldrA(rdlB(a, x), beta2(b)) - ldrA(rdrB(a, x), beta2(b)) - ldrA(rdotB(a, x), beta2(b)) - ldotA(rdlB(a, x), beta2(b)) - ldotA(rdrB(a, x), beta2(b)) - ldotA(rdotB(a, x), beta2(b)) = 0
identity m10 over A(x), B(a, b): rdotA(alpha2(x), dlB(a, b)) - rdotA(ldrB(b, x), beta1(a)) - dotB(beta1(a), rdrA(x, b)) = 0
identity m11 over A(x), B(a, b): ldotA(ldlB(a, x), beta2(b)) + dotB(rdlA(x, a), beta2(b)) - dotB(beta1(a), ldrA(x, b)) - rdotA(rdrB(b, x), beta1(a)) = 0
identity m12 over A(x), B(a, b): ldotA(alpha1(x), drB(a, b)) - dotB(ldlA(x, a), beta2(b)) - ldotA(rdlB(a, x), beta2(b)) = 0
identity m13 over A(x), B(a, b): rdotA(alpha2(x), drB(a, b)) - rdrA(ldotB(b, x), beta1(a)) - drB(beta1(a), rdotA(x, b)) = 0
identity m14 over A(x), B(a, b): ldotA(ldrB(a, x), beta2(b)) + dotB(rdrA(x, a), beta2(b)) - drB(beta1(a), ldotA(x, b)) - rdrA(rdotB(b, x), beta1(a)) = 0
identity m15 over A(x), B(a, b): ldrA(alpha1(x), dotB(a, b)) - dotB(ldrA(x, a), beta2(b)) - ldotA(rdrB(a, x), beta2(b)) = 0
identity m16 over A(x), B(a, b): rdlA(alpha2(x), dotB(a, b)) - rdotA(ldlB(b, x), beta1(a)) - dotB(beta1(a), rdlA(x, b)) = 0
identity m17 over A(x), B(a, b): ldlA(ldotB(a, x), beta2(b)) + dlB(rdotA(x, a), beta2(b)) - dotB(beta1(a), ldlA(x, b)) - rdotA(rdlB(b, x), beta1(a)) = 0
identity m18 over A(x), B(a, b): ldotA(alpha1(x), dlB(a, b)) - dlB(ldotA(x, a), beta2(b)) - ldlA(rdotB(a, x), beta2(b)) = 0
identity m19 over A(x), B(a, b): rdotA(alpha2(x), dotB(a, b)) - rdotA(ldotB(b, x), beta1(a)) - dotB(beta1(a), rdotA(x, b)) = 0
identity m20 over A(x), B(a, b): ldotA(ldotB(a, x), beta2(b)) + dotB(rdotA(x, a), beta2(b)) - dotB(beta1(a), ldotA(x, b)) - rdotA(rdotB(b, x), beta1(a)) = 0
identity m21 over A(x), B(a, b): ldotA(alpha1(x), dotB(a, b)) - dotB(ldotA(x, a), beta2(b)) - ldotA(rdotB(a, x), beta2(b)) = 0
identity m22 over A(x, y), B(a): rdlB(beta2(a), dlA(x, y)) - rdlB(ldlA(y, a), alpha1(x)) - rdlB(ldrA(y, a), alpha1(x)) - rdlB(ldotA(y, a), alpha1(x)) - rdrB(ldlA(y, a), alpha1(x)) - rdrB(ldrA(y, a), alpha1(x)) - rdrB(ldotA(y, a), alpha1(x)) - rdotB(ldlA(y, a), alpha1(x)) - rdotB(ldrA(y, a), alpha1(x)) - rdotB(ldotA(y, a), alpha1(x)) - dlA(alpha1(x), rdlB(a, y)) = 0
identity m23 over A(x, y), B(a): ldlB(ldlA(x, a), alpha2(y)) + dlA(rdlB(a, x), alpha2(y)) - dlA(alpha1(x), ldlB(a, y)) - rdlB(rdlA(y, a), alpha1(x)) = 0
identity m24 over A(x, y), B(a): ldlB(beta1(a), dlA(x, y)) + ldlB(beta1(a), drA(x, y)) + ldlB(beta1(a), dotA(x, y)) - dlA(ldlB(a, x), alpha2(y)) - drA(ldlB(a, x), alpha2(y)) - dotA(ldlB(a, x), alpha2(y)) - ldlB(rdlA(x, a), alpha2(y)) = 0
identity m25 over A(x, y), B(a): rdlB(beta2(a), drA(x, y)) - rdrB(ldlA(y, a), alpha1(x)) - drA(alpha1(x), rdlB(a, y)) = 0
identity m26 over A(x, y), B(a): ldlB(ldrA(x, a), alpha2(y)) + dlA(rdrB(a, x), alpha2(y)) - drA(alpha1(x), ldlB(a, y)) - rdrB(rdlA(y, a), alpha1(x)) = 0
identity m27 over A(x, y), B(a): ldlB(beta1(a), dlA(x, y)) - dlA(ldrB(a, x), alpha2(y)) - ldlB(rdrA(x, a), alpha2(y)) = 0
identity m28 over A(x, y), B(a): rdrB(beta2(a), dlA(x, y)) + rdrB(beta2(a), drA(x, y)) + rdrB(beta2(a), dotA(x, y)) - rdrB(ldrA(y, a), alpha1(x)) - drA(alpha1(x), rdrB(a, y)) = 0
identity m29 over A(x, y), B(a): ldrB(ldlA(x, a), alpha2(y)) + ldrB(ldrA(x, a), alpha2(y)) + ldrB(ldotA(x, a), alpha2(y)) + drA(rdlB(a, x), alpha2(y)) + drA(rdrB(a, x), alpha2(y)) + drA(rdotB(a, x), alpha2(y)) - drA(alpha1(x), ldrB(a, y)) - rdrB(rdrA(y, a), alpha1(x)) = 0
identity m30 over A(x, y), B(a): ldrB(beta1(a), drA(x, y)) - drA(ldrB(a, x), alpha2(y)) - ldlB(rdlA(x, a), alpha2(y)) - ldlB(rdrA(x, a), alpha2(y)) - ldlB(rdotA(x, a), alpha2(y)) - ldrB(rdlA(x, a), alpha2(y)) - ldrB(rdrA(x, a), alpha2(y)) - ldrB(rdotA(x, a), alpha2(y)) - ldotB(rdlA(x, a), alpha2(y)) - ldotB(rdrA(x, a), alpha2(y)) - ldotB(rdotA(x, a), alpha2(y)) = 0
identity m31 over A(x, y), B(a): rdotB(beta2(a), dlA(x, y)) - rdotB(ldrA(y, a), alpha1(x)) - dotA(alpha1(x), rdrB(a, y)) = 0
identity m32 over A(x, y), B(a): ldotB(ldlA(x, a), alpha2(y)) + dotA(rdlB(a, x), alpha2(y)) - dotA(alpha1(x), ldrB(a, y)) - rdotB(rdrA(y, a), alpha1(x)) = 0
identity m33 over A(x, y), B(a): ldotB(beta1(a), drA(x, y)) - dotA(ldlB(a, x), alpha2(y)) - ldotB(rdlA(x, a), alpha2(y)) = 0
identity m34 over A(x, y), B(a): rdotB(beta2(a), drA(x, y)) - rdrB(ldotA(y, a), alpha1(x)) - drA(alpha1(x), rdotB(a, y)) = 0
identity m35 over A(x, y), B(a): ldotB(ldrA(x, a), alpha2(y)) + dotA(rdrB(a, x), alpha2(y)) - drA(alpha1(x), ldotB(a, y)) - rdrB(rdotA(y, a), alpha1(x)) = 0
identity m36 over A(x, y), B(a): ldrB(beta1(a), dotA(x, y)) - dotA(ldrB(a, x), alpha2(y)) - ldotB(rdrA(x, a), alpha2(y)) = 0
identity m37 over A(x, y), B(a): rdlB(beta2(a), dotA(x, y)) - rdotB(ldlA(y, a), alpha1(x)) - dotA(alpha1(x), rdlB(a, y)) = 0
identity m38 over A(x, y), B(a): ldlB(ldotA(x, a), alpha2(y)) + dlA(rdotB(a, x), alpha2(y)) - dotA(alpha1(x), ldlB(a, y)) - rdotB(rdlA(y, a), alpha1(x)) = 0
identity m39 over A(x, y), B(a): ldotB(beta1(a), dlA(x, y)) - dlA(ldotB(a, x), alpha2(y)) - ldlB(rdotA(x, a), alpha2(y)) = 0
identity m40 over A(x, y), B(a): rdotB(beta2(a), dotA(x, y)) - rdotB(ldotA(y, a), alpha1(x)) - dotA(alpha1(x), rdotB(a, y)) = 0
identity m41 over A(x, y), B(a): ldotB(ldotA(x, a), alpha2(y)) + dotA(rdotB(a, x), alpha2(y)) - dotA(alpha1(x), ldotB(a, y)) - rdotB(rdotA(y, a), alpha1(x)) = 0
identity m42 over A(x, y), B(a): ldotB(beta1(a), dotA(x, y)) - dotA(ldotB(a, x), alpha2(y)) - ldotB(rdotA(x, a), alpha2(y)) = 0
)IDN";

}  // namespace bihom::detail
