#pragma once

#include <string>
#include <vector>

#include "kirkfp/op.hpp"

namespace kirkfp {

/// Built-in operator corpus, addressable by string id for CLI use.
/// Every entry's declared class is verified by the test suite against the
/// sampling checkers at tol 1e-10.
const std::vector<Operator>& corpus();

const Operator& corpus_get(const std::string& id);

std::vector<std::string> corpus_ids();

/// Machine-readable corpus table, one CSV row per operator:
/// id,dimension,class,a,L,phi,norm,q
std::string corpus_table_csv();

} // namespace kirkfp
