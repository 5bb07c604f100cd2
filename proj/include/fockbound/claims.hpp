#pragma once

#include <array>
#include <string_view>

namespace fockbound::claims {

// Stable claim identifiers. Every verifier tags its records with one of
// these; `list-claims` prints the same table.
inline constexpr std::string_view kQInnerOracle = "q-inner-oracle";
inline constexpr std::string_view kQCommutation = "q-commutation";
inline constexpr std::string_view kCreationCompositeLaw = "creation-composite-law";
inline constexpr std::string_view kCreationCoeffSym = "creation-coeff-sym";
inline constexpr std::string_view kCreationCoeffAnti = "creation-coeff-anti";
inline constexpr std::string_view kAdjointConsistency = "adjoint-consistency";
inline constexpr std::string_view kCovarianceULeft = "covariance-U-left";
inline constexpr std::string_view kCovarianceURight = "covariance-U-right";
inline constexpr std::string_view kCovarianceJlJ = "covariance-JlJ";
inline constexpr std::string_view kCovarianceJrJ = "covariance-JrJ";
inline constexpr std::string_view kModularInvolution = "modular-involution";
inline constexpr std::string_view kRepUHomomorphism = "rep-U-homomorphism";
inline constexpr std::string_view kRepUPhase = "rep-U-phase";
inline constexpr std::string_view kFieldNormBound = "field-norm-bound";
inline constexpr std::string_view kExpFieldUnitary = "exp-field-unitary";
inline constexpr std::string_view kIntertwineLeftMult = "intertwine-left-mult";
inline constexpr std::string_view kCommutatorCompact = "commutator-compact";
inline constexpr std::string_view kOmegaL1Identity = "omega-l1-identity";
inline constexpr std::string_view kOmegaTranslationBound = "omega-translation-bound";
inline constexpr std::string_view kMuTranslationBound = "mu-translation-bound";
inline constexpr std::string_view kOmegaCreationBound = "omega-creation-bound";
inline constexpr std::string_view kMuCreationWeighted = "mu-creation-weighted";
inline constexpr std::string_view kMuQCompatibility = "mu-q-compatibility";
inline constexpr std::string_view kOmegaInvolutionSymmetry = "omega-involution-symmetry";
inline constexpr std::string_view kDecayEnvelope = "decay-envelope";
inline constexpr std::string_view kShellCoverForward = "shell-cover-forward";
inline constexpr std::string_view kShellGeneratorSup = "shell-generator-sup";
inline constexpr std::string_view kLengthQInvariance = "length-q-invariance";
inline constexpr std::string_view kSignPermutationLaw = "sign-permutation-law";
inline constexpr std::string_view kSemigroupInvolution = "semigroup-involution";
inline constexpr std::string_view kWreathClosureUnion = "wreath-closure-union";
inline constexpr std::string_view kWreathClosureInverse = "wreath-closure-inverse";
inline constexpr std::string_view kWreathClosureLetter = "wreath-closure-letter";
inline constexpr std::string_view kWreathClosureTranslation = "wreath-closure-translation";
inline constexpr std::string_view kWreathOmegaTranslation = "wreath-omega-translation";
inline constexpr std::string_view kWreathOmegaCreation = "wreath-omega-creation";
inline constexpr std::string_view kWreathOmegaStructure = "wreath-omega-structure";
inline constexpr std::string_view kWreathSuppRatio = "wreath-supp-ratio";
inline constexpr std::string_view kWreathLengthShell = "wreath-length-shell";

struct ClaimInfo {
  std::string_view id;
  std::string_view anchor;  // citation string for the checked statement
  std::string_view suites;  // comma-separated suite names
};

inline constexpr std::array<ClaimInfo, 39> kRegistry{{
    {kQInnerOracle, "where i(sigma) is the number of inversions", "full,sym,anti"},
    {kQCommutation, "satisfy the q-commutation relation", "full,anti"},
    {kCreationCompositeLaw, "l(s)l(t) =_C l(st)", "full,sym,anti"},
    {kCreationCoeffSym, "C_{x,[y]}^2 = k_i+1 and 1 <= C_{x,[y]} <= sqrt(n+1)", "sym"},
    {kCreationCoeffAnti, "then l(x)delta_{[z]} = 0; signs in {1,-1}", "anti"},
    {kAdjointConsistency, "<l(s)u, v> = <u, l(s)*v> on the truncation", "full,sym,anti"},
    {kCovarianceULeft, "U^pi_g l(s) U_g^{pi*} = l(pi_g(s))", "full,sym,anti"},
    {kCovarianceURight, "U^pi_g r(s) U_g^{pi*} = r(pi_g(s))", "full,sym,anti"},
    {kCovarianceJlJ, "J_S l(s) J_S = r(Is)", "full,sym,anti"},
    {kCovarianceJrJ, "J_S r(s) J_S = l(Is)", "full,sym,anti"},
    {kModularInvolution, "J_q^2 = id and J Omega = Omega", "full,sym,anti"},
    {kRepUHomomorphism, "U^pi_g = 1_Omega + sum pi_g tensor powers", "full,sym,anti"},
    {kRepUPhase, "U^pi_g delta_x =_T delta_{pi_g(x)}", "full,sym,anti"},
    {kFieldNormBound, "||W(x)P_{<=m}||_inf <= 2 sqrt(m+1)", "sym"},
    {kExpFieldUnitary, "has absolute convergence in norm", "sym"},
    {kIntertwineLeftMult, "f pi_l(l(s)) = pi_l(l(s)) f(s .)", "full,sym,anti"},
    {kCommutatorCompact, "[l(x)*, r(y)] = delta_{x,y} P_{C Omega}", "full"},
    {kOmegaL1Identity, "||omega(x,g)||_1 = |(x,g)|_0^2 + |(x,g)|_1", "full,sym,anti"},
    {kOmegaTranslationBound, "||g.omega(z) - omega(gz)||_1 <= |z|_0 |g|_Gamma", "full,sym,anti"},
    {kMuTranslationBound, "<= 2(|g|_Gamma + |h|_Gamma) |z|_0 / (|z|_0^2 + |z|_1)", "full,sym,anti"},
    {kOmegaCreationBound, "||omega(xz) - omega(z)||_1 <= 2|z|_0 + 1 + |x|_X", "full,sym,anti"},
    {kMuCreationWeighted, "sqrt(|z|_0+1) prefactor on (4|z|_0 + 4 + |x|_X)", "sym,anti"},
    {kMuQCompatibility, "mu_sym([x],g) := ... = mu(x,g)", "sym"},
    {kOmegaInvolutionSymmetry, "omega relabeled by I matches omega of I(z)", "full,sym,anti"},
    {kDecayEnvelope, "{x in X : |f(x)| > eps} is small", "full,sym,anti"},
    {kShellCoverForward, "union over n<=R of Q(B_R(X)^k Gamma B_R(X)^{n-k})", "full,sym,anti"},
    {kShellGeneratorSup, "<= n + m + sum |x_i|_X + sum |y_j|_X =: M", "full,sym,anti"},
    {kLengthQInvariance, "|([x],g)|_sym = |(x,g)|_full", "full,sym"},
    {kSignPermutationLaw, "C_{sigma(x)} = sgn(sigma) C_x", "anti"},
    {kSemigroupInvolution, "I(s,g) := (pi_g^{-1}(Is), g^{-1})", "full,sym,anti"},
    {kWreathClosureUnion, "A(E,F,n) cup A(E',F',m) subset A(E cup E', F cup F', max{n,m})", "wreath"},
    {kWreathClosureInverse, "A(E,F,n)^{-1} = A(E^{-1},F,n)", "wreath"},
    {kWreathClosureLetter, "x A(E,F,n) subset A(E cup {x} cup xE, F cup {j}, n+1)", "wreath"},
    {kWreathClosureTranslation, "translates of A(E,F,n) stay in an enlarged A", "wreath"},
    {kWreathOmegaTranslation, "||g.omega(z) - omega(gz)||_1 <= |g|_Gamma |supp(y)|", "wreath"},
    {kWreathOmegaCreation, "||omega(xz) - omega(z)||_1 <= ||omega(x)||_1", "wreath"},
    {kWreathOmegaStructure, "||omega(y,g)||_1 = |(y,g)|_free; a(y) additive; omega(y^{-1},g) = omega(y,g)", "wreath"},
    {kWreathSuppRatio, "|(y,g)|_free <= 4C |B_{2C}(I)|", "wreath"},
    {kWreathLengthShell, "(a) n <= N and (b) y_{i_k} in B_N(Delta)", "wreath"},
}};

}  // namespace fockbound::claims
