#ifndef PRANDTL_TESTS_ORACLE_VALUES_HPP
#define PRANDTL_TESTS_ORACLE_VALUES_HPP

// Values frozen from tests/oracles/*.py (outputs kept next to the scripts).

namespace oracle {

// blasius_oracle.py: DOP853 at rtol 1e-13 + brentq, and a 1e6-step RK4 bisection.
inline constexpr double kFpp0Zmax12 = 0.332057336215268;
inline constexpr double kFpp0Zmax20 = 0.332057336215193;
inline constexpr double kFpp0Rk4Million = 0.332057336215121;
inline constexpr double kFAt1 = 0.165571725789318;
inline constexpr double kFpAt1 = 0.329780031249743;
inline constexpr double kFppAt1 = 0.323007116687015;

// constants_oracle.py, 50-digit arithmetic on the 1e5-point beta sweep.
namespace reference {  // c0=0.5, mu=0.005, alpha0=0.5, C1=1, X=1
inline constexpr double kBeta = 111.26666220798153246;
inline constexpr double kB = 4.1332719224812511101e-51;
inline constexpr double kK = 5.4365636569180904707;
inline constexpr double kDelta = 3.2032381472197232787e-103;
inline constexpr double kBeta0Max = 4.2709841962929643715e-102;
inline constexpr double kBeta0 = 3.8438857766636679344e-102;
inline constexpr double kGridMax = 101.15151109816502951;
inline constexpr double kContinuousMax = 101.15151110209990213;
inline constexpr double kKMin = 42.38653893238429;  // 1e6-point sweep
}  // namespace reference

namespace run {  // c0=0.25, mu=0.005, alpha0=0.5, C1=1, X=0.1
inline constexpr double kBeta = 445.06664883192612983;
inline constexpr double kB = 2.0359280797365669112e-22;
inline constexpr double kK = 2.2103418361512952619;
inline constexpr double kDelta = 7.7718808984871714154e-46;
inline constexpr double kBeta0Max = 1.0362507864649561887e-44;
inline constexpr double kBeta0 = 9.3262570781846056985e-45;
inline constexpr double kKMin = 169.54615572953716;
}  // namespace run

}  // namespace oracle

#endif  // PRANDTL_TESTS_ORACLE_VALUES_HPP
