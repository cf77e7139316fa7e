#pragma once

#include "torcob/fan.hpp"

namespace torcob {

// Catalog of built-in fans, also shipped as JSON under data/fans/. Names:
// a1 a2 a3, p1 p2 p3 p4, p1xp1, f0 f1 f2 f3, blp2.
Fan builtin_fan(const std::string& name);
std::vector<std::string> builtin_fan_names();

Fan affine_space(int s);      // A^s: one cone on the standard basis of Z^s
Fan projective_space(int n);  // P^n: e_1..e_n and -(e_1+...+e_n)
Fan product_p1_p1();
Fan hirzebruch(int a);        // rays (1,0),(0,1),(-1,a),(0,-1)
Fan blowup_p2();              // P^2 blown up at the fixed point of {e1,e2}

}  // namespace torcob
