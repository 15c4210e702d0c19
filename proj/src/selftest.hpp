#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace invt {

struct CriterionResult {
	int id = 0;
	std::string name;
	bool pass = false;
	std::string detail;
};

constexpr int criterion_count = 16;

CriterionResult run_criterion(int id, std::uint64_t seed);
std::vector<CriterionResult> run_selftest(std::uint64_t seed);

} // namespace invt
