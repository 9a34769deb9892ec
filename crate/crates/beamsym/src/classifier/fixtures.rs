//! Exact-rational regression anchors for the generated tables, evaluated at
//! two integer jets.  Each constant is the correctly rounded double of an
//! exact rational value, so table evaluation must match to relative 1e-14.

#![allow(clippy::excessive_precision)]

pub const JET_A_F: [f64; 6] = [2.0, 3.0, 5.0, 7.0, 11.0, 13.0];
pub const JET_A_G: [f64; 7] = [17.0, 19.0, 23.0, 29.0, 31.0, 37.0, 41.0];
pub const H11_AT_A: f64 = 12.490001611405683; // exactly 3255419/260642
pub const H12_AT_A: f64 = -0.08116496957512603; // exactly -21155/260642
pub const H21_AT_A: f64 = 7.695756175763825; // exactly 1448214517/188183524
pub const H22_AT_A: f64 = 3.1995760425870228; // exactly 602107495/188183524
pub const CLASS1_G3_AT_A: f64 = -6.588157894736842; // exactly -5007/760
pub const CLASS1_F4_AT_A: f64 = 4.6375; // exactly 371/80
pub const CLASS2_G4_AT_A: f64 = -13.26144288740427; // exactly -3255419/245480
pub const CLASS2_F5_AT_A: f64 = -4.7479102167182665; // exactly -61343/12920
pub const CLASS3_G4_AT_A: f64 = 1.4650277008310248; // exactly 4231/2888
pub const CLASS3_F5_AT_A: f64 = -25.480263157894736; // exactly -3873/152

pub const JET_B_F: [f64; 6] = [3.0, -2.0, 5.0, -7.0, 2.0, -4.0];
pub const JET_B_G: [f64; 7] = [-2.0, 3.0, -5.0, 7.0, -3.0, 2.0, -6.0];
pub const H11_AT_B: f64 = 4.666666666666667; // exactly 14/3
pub const H12_AT_B: f64 = 36.666666666666664; // exactly 110/3
pub const H21_AT_B: f64 = 320.51851851851853; // exactly 8654/27
pub const H22_AT_B: f64 = -310.5925925925926; // exactly -8386/27
pub const CLASS1_G3_AT_B: f64 = -3.9; // exactly -39/10
pub const CLASS1_F4_AT_B: f64 = -7.033333333333333; // exactly -211/30
pub const CLASS2_G4_AT_B: f64 = 0.7; // exactly 7/10
pub const CLASS2_F5_AT_B: f64 = -6.688888888888889; // exactly -301/45
pub const CLASS3_G4_AT_B: f64 = -11.0; // exactly -11/1
pub const CLASS3_F5_AT_B: f64 = -48.888888888888886; // exactly -440/9

// order-reduction right-hand sides at (t,y,y',y'')=(2,3,5,7), (t,z,z')=(2,3,5), (u,v)=(2,3)
pub const STAGE1_RHS_AT: f64 = -50.96805555555556; // exactly -36697/720
pub const STAGE2_RHS_AT: f64 = -252.2375; // exactly -20179/80
pub const STAGE3_RHS_AT: f64 = -15.833333333333334; // exactly -95/6
