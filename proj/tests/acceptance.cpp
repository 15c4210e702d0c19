// One PASS/FAIL line per acceptance criterion; exit status 1 if any fail.
#include "selftest.hpp"

#include <cstdio>
#include <cstdlib>
#include <string>

int main(int argc, char** argv)
{
	std::uint64_t seed = 42;
	if (argc > 1)
		seed = std::strtoull(argv[1], nullptr, 10);
	int failed = 0;
	for (const auto& c : invt::run_selftest(seed)) {
		std::printf("%s [%d] %s: %s\n", c.pass ? "PASS" : "FAIL", c.id, c.name.c_str(), c.detail.c_str());
		failed += !c.pass;
	}
	std::printf("%d/%d passed\n", invt::criterion_count - failed, invt::criterion_count);
	return failed ? 1 : 0;
}
