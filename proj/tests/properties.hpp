#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace wbf::test {

struct PropertyResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;
  double seconds = 0;

  bool ok() const { return failures == 0 && cases >= 100; }
  std::string summary() const;
};

PropertyResult prop_weyl_associativity(unsigned seed);
PropertyResult prop_action_compatibility(unsigned seed);
PropertyResult prop_inverse_derivative(unsigned seed);
PropertyResult prop_buchberger_postcondition(unsigned seed);
PropertyResult prop_normal_form_idempotent(unsigned seed);
PropertyResult prop_initial_annihilates_truncation(unsigned seed);
PropertyResult prop_power_homothecy(unsigned seed);
PropertyResult prop_pgamma_contract(unsigned seed);
PropertyResult prop_initial_witnesses(unsigned seed);
PropertyResult prop_parser_roundtrip(unsigned seed);
PropertyResult prop_shift_pair_rule(unsigned seed);
PropertyResult prop_theta_homomorphism(unsigned seed);

}  // namespace wbf::test
