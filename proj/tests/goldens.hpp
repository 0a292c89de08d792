#pragma once

// Frozen CLI table outputs (text format).  The acceptance suite and the CLI
// tests both compare against these bytes.

namespace goldens {

inline constexpr const char* classify_grassmann =
    "space   type           verdict          evidence  citations\n"
    "G(2,7)  (1,1,1,1,1,1)  not-weak-2-Fano  -         AC Prop 31; AC Prop 32(iv)\n"
    "G(3,6)  (1,1,1,1,1)    not-weak-2-Fano  -         AC Prop 31; AC Prop 32(iv)\n"
    "G(2,6)  (1,1,1,1)      not-weak-2-Fano  -         AC Prop 31; AC Prop 32(iv)\n"
    "G(2,6)  (1,1,1,2)      not-weak-2-Fano  -         AC Prop 31; AC Prop 32(iv)\n"
    "G(2,5)  (1,1)          not-weak-2-Fano  -1/2      de Arruda Cor 5.1 (effective surface "
    "dual to sigma_{1,1}); ch2 pairing certificate\n"
    "G(2,5)  (1,2)          not-weak-2-Fano  -         AC Prop 31; AC Prop 32(iv)\n"
    "G(2,5)  (1,3)          not-weak-2-Fano  -         AC Prop 31; AC Prop 32(iv)\n"
    "G(2,5)  (2,2)          not-weak-2-Fano  -         AC Prop 31; AC Prop 32(iv)\n";

inline constexpr const char* classify_og =
    "space     type     verdict          evidence  citations\n"
    "OG(3,7)   (1,1)    2-Fano           -         half-spinor identification; "
    "Kobayashi-Ochiai; AC Thm 3 (quadrics)  -- OG(3,7) = OG+(4,8); the section is a smooth "
    "quadric fourfold\n"
    "OG(2,7)   (1,1,1)  undetermined     -         Kuchle (b8); Kuchle Thm 4.8: h^{1,3} > 0; "
    "assumes: very general  -- Eff_2 polyhedral: cycles induced from the ambient space "
    "(rank <= 2); assumes: very general\n"
    "OG+(2,6)  (2)      not-weak-2-Fano  -         AC Example 21  -- = type (1,2) section in "
    "P^3 x P^3\n"
    "OG+(2,6)  (1)      not-weak-2-Fano  -         AC Example 21  -- = type (1,1) divisor "
    "section in P^3 x P^3\n"
    "\n"
    "half-spinor (2r = s):\n"
    "space     type   verdict  evidence  citations\n"
    "OG+(4,8)  (1,1)  2-Fano   -         AC Prop 34 with the type-(2) correction; "
    "Kobayashi-Ochiai  -- half-spinor degrees; X is a smooth quadric in P^5\n";

inline constexpr const char* classify_sg =
    "space    type     verdict          evidence  citations\n"
    "SG(3,6)  (1,1)    not-weak-2-Fano  -         AC Prop 36\n"
    "SG(3,6)  (1,2)    not-weak-2-Fano  -         AC Prop 36\n"
    "SG(2,6)  (1,1,1)  not-weak-2-Fano  -         AC Prop 32(i); zero-locus re-expression  "
    "-- = type (1,1,1,1) in G(2,6): SG(2,6) is the zero locus of wedge^2 S^dual = O(1)\n"
    "SG(2,6)  (1,1,2)  not-weak-2-Fano  -         AC Prop 32(i); zero-locus re-expression  "
    "-- = type (1,1,1,2) in G(2,6): SG(2,6) is the zero locus of wedge^2 S^dual = O(1)\n";

}  // namespace goldens
