"""Frozen oracle values, computed before the build by independent routes
at 40 significant digits (mpmath) and pinned here.

Routes:
  GAMMA_1PI        direct numerical integration of int_0^inf t^z e^-t dt/t
                   (tanh-sinh panels on [0,5,50,200])
  POCH_HALF_I_3    repeated multiplication a(a+1)(a+2)
  F_1_1_2_HALF     closed form -ln(1-z)/z at z = 1/2
  F_CONJ_Z         brute-force series summation, 200 terms
  P_NU1            dense sign scan at step 1e-3 on [-10, 0), then
                   bisection to below 1e-12 on 2F1(1.5, 1.5; 1; z)
  P_NU2            same scan+bisection on 2F1(2.5, 2.5; 1; z)
  W_03I_07_1P1I    e^{-z/2} z^{m+1/2} U(1/2+m-k, 1+2m, z) via the
                   confluent U series route (not the whitw route)
  K2_1P1I          sqrt(pi/2z) W_{0,2}(2z) with W from the U route
"""

GAMMA_1PI = complex(0.49801566811835604271, -0.15494982830181068512)
POCH_HALF_I_3 = complex(-2.625, 4.75)
F_1_1_2_HALF = 1.3862943611198906188
F_CONJ_Z = complex(1.4057388934080928283, 0.4174933597157497255)
P_NU1 = -4.7509195974257688366
P_NU2 = -0.45736170397901920097
W_03I_07_1P1I = complex(0.56012815900601368223, -0.19690025462934237431)
K2_1P1I = complex(-0.35495344133093119744, -0.84156523861025996399)

# reference values quoted to lower precision by the source analysis
P_NU2_REF = -0.4573617040      # +/- 1e-9
THETA_NU2_REF = 2.165428404    # +/- 1e-8
