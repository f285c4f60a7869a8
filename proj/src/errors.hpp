#pragma once

#include <stdexcept>
#include <string>

namespace wgg {

// Input that does not parse (bad JSON, missing fields, wrong shapes).
struct parse_error : std::runtime_error {
  explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// Input that parses but violates a contract (dimension mismatch, infinite
// effective color list, unbalanced set where balance is required, ...).
struct semantic_error : std::runtime_error {
  explicit semantic_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace wgg
