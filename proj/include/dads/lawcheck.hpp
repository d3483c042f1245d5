#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "dads/random.hpp"

namespace dads {

/// Result of one randomized law. Artifacts hold the first counterexample
/// as serializable files (suffix, content).
struct LawOutcome {
    std::string law;
    std::uint64_t trials = 0;
    std::uint64_t failures = 0;
    std::int64_t first_failure_trial = -1;
    std::string note;
    std::vector<std::pair<std::string, nlohmann::json>> artifacts;

    bool pass() const { return failures == 0; }
};

/// Parameters of the operator-level laws (adjointness, shifts, module
/// axioms, bilinearity).
struct OperatorLawParams {
    std::uint32_t modulus = 7;
    std::vector<std::uint32_t> var_counts = {1, 2, 3};
    std::uint64_t max_degree = 3;
    std::int64_t bound = 10;
    std::size_t max_dim = 3;
    bool transpose_adjoint = false;  // deliberately wrong convention; negative control
};

LawOutcome check_adjoint_scalar(const OperatorLawParams& p, std::uint64_t seed, std::uint64_t trials);
LawOutcome check_adjoint_matrix(const OperatorLawParams& p, std::uint64_t seed, std::uint64_t trials);
LawOutcome check_shift_composition(const OperatorLawParams& p, std::uint64_t seed, std::uint64_t trials);
LawOutcome check_module_identity(const OperatorLawParams& p, std::uint64_t seed, std::uint64_t trials);
LawOutcome check_module_distributive(const OperatorLawParams& p, std::uint64_t seed, std::uint64_t trials);
LawOutcome check_module_associative(const OperatorLawParams& p, std::uint64_t seed, std::uint64_t trials);
LawOutcome check_bilinearity(const OperatorLawParams& p, std::uint64_t seed, std::uint64_t trials);

struct KernelLawParams {
    std::uint32_t modulus = 5;
    std::vector<std::uint32_t> var_counts = {1, 2};
    std::uint64_t max_degree = 2;
    std::size_t max_dim = 2;
    std::int64_t bound = 6;
};

LawOutcome check_kernel_certificate(const KernelLawParams& p, std::uint64_t seed, std::uint64_t trials);

struct PerpLawParams {
    std::uint32_t modulus = 5;
    std::vector<std::uint32_t> var_counts = {1, 2};
    std::uint64_t max_degree = 2;
    std::size_t max_l = 2;
    std::size_t max_gens = 2;
    std::int64_t annihilator_degree = 4;
    std::int64_t bound = 8;
};

LawOutcome check_triple_perp(const PerpLawParams& p, std::uint64_t seed, std::uint64_t trials);
LawOutcome check_redundant_generators(const PerpLawParams& p, std::uint64_t seed, std::uint64_t trials);

struct QuotientLawParams {
    std::uint32_t modulus = 7;
    std::vector<std::uint32_t> var_counts = {1, 2};
    std::uint64_t max_degree = 2;
    std::size_t max_l = 2;
    std::size_t max_gens = 2;
    std::int64_t bound = 8;
};

LawOutcome check_quotient_pairing(const QuotientLawParams& p, std::uint64_t seed, std::uint64_t trials);

/// Laws of one named suite ({adjoint, shift, module, perp, quotient, all})
/// with default parameters; unknown names are a reported error.
std::vector<LawOutcome> run_suite(const std::string& suite, std::uint64_t seed,
                                  std::uint64_t trials, bool transpose_debug = false);

}  // namespace dads
