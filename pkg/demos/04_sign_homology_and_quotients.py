# Twisted first homology, index-two subgroups and finite quotients.
from braidhom.finite_quotients import PermGroup, search
from braidhom.presentations import bundled, semidirect_presentation
from braidhom.rs_even import EvenSubgroup, abelian_invariants, h1_sign, h1_sign_dl, h1_sign_fox

# H_1(B(e,e,r), Z_eps) three ways
for r in (2, 3, 4, 5):
    for e in (2, 3, 4):
        gp = bundled(f"cp_{e}_{r}").as_group()
        print(f"B({e},{e},{r}):", h1_sign_dl(e, r), "|", h1_sign(gp), "|", h1_sign_fox(gp))

# Reidemeister-Schreier for G24: kernel of the sign map
g24 = bundled("g24")
sub = EvenSubgroup(g24)
print("Schreier generators:", sub.names)
print("abelianized even subgroup:", abelian_invariants(sub.presentation()))
print("H_1(G24, Z_eps):", h1_sign(g24))

# Semidirect products: T acts by shifting, the s_i carry the sign
for r in (3, 4, 5):
    print(f"r={r}", [str(h1_sign(semidirect_presentation(e, r), [0] + [1] * r)) for e in range(1, 5)])

# Homomorphisms to A5 and S6
print("G24 -> A5:", search(g24, PermGroup.alternating(5)).as_dict())
print("B(3,3,4) -> S6:", search(bundled("b334"), PermGroup.symmetric(6)).as_dict())
