#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include "invt.h"

#include <cstdlib>
#include <memory>
#include <string>

namespace {

struct Ctx {
	invt_context* c = invt_context_new();
	~Ctx() { invt_context_free(c); }
};

struct Res {
	invt_result* r = nullptr;
	~Res() { invt_result_free(r); }
	std::string text() const { return invt_result_text(r); }
	nlohmann::json json() const { return nlohmann::json::parse(invt_result_json(r)); }
};

} // namespace

TEST_CASE("context defaults and environment")
{
	unsetenv("INVT_TRUNC");
	{
		Ctx ctx;
		CHECK(invt_context_trunc(ctx.c) == 20);
		CHECK(std::string(invt_last_error(ctx.c)).empty());
		invt_context_set_trunc(ctx.c, 7);
		CHECK(invt_context_trunc(ctx.c) == 7);
	}
	setenv("INVT_TRUNC", "9", 1);
	{
		Ctx ctx;
		CHECK(invt_context_trunc(ctx.c) == 9);
	}
	setenv("INVT_TRUNC", "nine", 1);
	{
		Ctx ctx;
		CHECK(invt_context_trunc(ctx.c) == 20);
	}
	unsetenv("INVT_TRUNC");
}

TEST_CASE("binary commands")
{
	Ctx ctx;
	{
		Res r;
		REQUIRE(invt_binary_invariants(ctx.c, 4, 2, &r.r) == INVT_OK);
		CHECK(r.json().is_object());
		CHECK(r.text().find("a0*a4") != std::string::npos);
	}
	for (const char* m : {"kernel", "cs"}) {
		Res r;
		REQUIRE(invt_binary_dim(ctx.c, 6, 6, m, &r.r) == INVT_OK);
		CHECK(r.text() == "3\n");
	}
	{
		Res r;
		CHECK(invt_binary_dim(ctx.c, 4, 2, "guess", &r.r) == INVT_EINVAL);
		CHECK(r.r == nullptr);
		CHECK_FALSE(std::string(invt_last_error(ctx.c)).empty());
	}
	{
		Res r;
		REQUIRE(invt_reynolds(ctx.c, 2, 2, "a1^2", &r.r) == INVT_OK);
		CHECK_FALSE(r.text().empty());
		CHECK(std::string(invt_last_error(ctx.c)).empty());
	}
	{
		Res r;
		CHECK(invt_reynolds(ctx.c, 2, 2, "a1^", &r.r) == INVT_EINVAL);
	}
	{
		Res r;
		REQUIRE(invt_transvectant(ctx.c, 2, 2, 2, "1,0,-1", nullptr, 1, &r.r) == INVT_OK);
		CHECK(r.text() == "-8\n"); // 2(f_xx f_yy - f_xy^2)
	}
	{
		Res r;
		REQUIRE(invt_transvectant(ctx.c, 4, 4, 4, nullptr, nullptr, 1, &r.r) == INVT_OK);
		CHECK(r.text().find("a0*a4") != std::string::npos);
	}
	{
		Res r;
		CHECK(invt_transvectant(ctx.c, 2, 2, 3, nullptr, nullptr, 0, &r.r) == INVT_EINVAL);
	}
}

TEST_CASE("ternary and generating function commands")
{
	Ctx ctx;
	{
		Res r;
		REQUIRE(invt_ternary_invariants(ctx.c, 3, 4, &r.r) == INVT_OK);
		CHECK(r.text().find("f300") != std::string::npos);
	}
	{
		Res r;
		REQUIRE(invt_bedratyuk(ctx.c, 3, 4, &r.r) == INVT_OK);
		CHECK(r.text() == "1\n");
	}
	invt_context_set_trunc(ctx.c, 6);
	{
		Res r;
		REQUIRE(invt_springer(ctx.c, 4, 0, &r.r) == INVT_OK);
		CHECK(r.text().rfind("1 + z^2 + z^3 + z^4", 0) == 0);
		CHECK(r.json()["trunc"] == 6);
	}
	{
		Res r;
		REQUIRE(invt_springer(ctx.c, 2, -1, &r.r) == INVT_OK);
		CHECK(r.text().find("w") != std::string::npos);
	}
	{
		Res r;
		REQUIRE(invt_molien(ctx.c, "S6", "X2", &r.r) == INVT_OK);
		CHECK(r.text().rfind("1 + t^2 + t^3", 0) == 0);
	}
	{
		Res r;
		REQUIRE(invt_molien(ctx.c, "A6", "X11", &r.r) == INVT_OK);
		CHECK(r.text().rfind("1 + ", 0) == 0);
	}
	{
		Res r;
		CHECK(invt_molien(ctx.c, "S5", "X2", &r.r) == INVT_EINVAL);
	}
	{
		Res r;
		REQUIRE(invt_howe(ctx.c, 6, 2, &r.r) == INVT_OK);
		CHECK(r.json()["dimension"] == 15);
	}
	{
		Res r;
		CHECK(invt_howe(ctx.c, 5, 1, &r.r) == INVT_EINVAL);
	}
}

TEST_CASE("tableau and graph commands")
{
	Ctx ctx;
	{
		Res r;
		REQUIRE(invt_symbolic_expand(ctx.c, "11,22", &r.r) == INVT_OK);
		CHECK(r.json()["d"] == 2);
	}
	{
		Res a, b;
		REQUIRE(invt_symbolic_expand(ctx.c, "[12]^2[13]^2[23]^2", &a.r) == INVT_OK);
		REQUIRE(invt_symbolic_expand(ctx.c, "111122,223333", &b.r) == INVT_OK);
		CHECK(a.text() == b.text());
	}
	{
		Res r;
		CHECK(invt_symbolic_expand(ctx.c, "[12] + [13]", &r.r) == INVT_EINVAL);
	}
	{
		Res r;
		REQUIRE(invt_straighten(ctx.c, "(13)(24)", &r.r) == INVT_OK);
		CHECK(r.text() == "(12)(34) + (14)(23)\n");
	}
	{
		Res r;
		REQUIRE(invt_straighten(ctx.c, "[14][23]", &r.r) == INVT_OK);
		CHECK(r.text() == "-[12][34] + [13][24]\n");
		CHECK(r.json()["basis"] == "semistandard");
	}
	{
		Res r;
		CHECK(invt_straighten(ctx.c, "(12)[34]", &r.r) == INVT_EINVAL);
	}
	{
		int h = 1;
		Res r;
		REQUIRE(invt_noncrossing(ctx.c, 6, &h, 1, &r.r) == INVT_OK);
		CHECK(r.json()["count"] == 5);
	}
	{
		int h[3] = {1, 1, 1};
		Res r;
		REQUIRE(invt_noncrossing(ctx.c, 3, h, 3, &r.r) == INVT_OK);
		CHECK(r.text() == "none\n");
	}
	{
		int h[2] = {1, 1};
		Res r;
		CHECK(invt_noncrossing(ctx.c, 3, h, 2, &r.r) == INVT_EINVAL);
	}
}

TEST_CASE("check commands")
{
	Ctx ctx;
	invt_context_set_seed(ctx.c, 7);
	{
		Res r;
		REQUIRE(invt_six_line_checks(ctx.c, 2, &r.r) == INVT_OK);
		CHECK(r.text().rfind("PASS ", 0) == 0);
		CHECK(r.json()["seed"] == 7);
	}
	{
		// the quadratic conic relation fails, and the report is returned
		Res r;
		CHECK(invt_six_plane_checks(ctx.c, 2, &r.r) == INVT_EVERIFY);
		REQUIRE(r.r != nullptr);
		CHECK(r.text().find("FAIL d2^2") != std::string::npos);
		CHECK(std::string(invt_last_error(ctx.c)) == "verification failed");
	}
	{
		Res r;
		CHECK(invt_six_line_checks(ctx.c, 0, &r.r) == INVT_EINVAL);
	}
	{
		Res r;
		REQUIRE(invt_selftest(ctx.c, 1, &r.r) == INVT_OK);
		CHECK(r.text().rfind("PASS [1]", 0) == 0);
	}
	{
		Res r;
		CHECK(invt_selftest(ctx.c, 17, &r.r) == INVT_EINVAL);
	}
	{
		Res r;
		CHECK(invt_selftest(nullptr, 1, &r.r) == INVT_EINVAL);
		CHECK(invt_selftest(ctx.c, 1, nullptr) == INVT_EINVAL);
	}
}

TEST_CASE("polynomial handles")
{
	Ctx ctx;
	invt_poly *p = nullptr, *q = nullptr;
	REQUIRE(invt_poly_parse(ctx.c, "x,y", "(x + y)^2 - 2*x*y", &p) == INVT_OK);
	CHECK(std::string(invt_poly_str(p)) == "x^2 + y^2");
	std::string js = invt_poly_json(p);
	REQUIRE(invt_poly_from_json(ctx.c, js.c_str(), &q) == INVT_OK);
	CHECK(invt_poly_equal(p, q) == 1);
	auto j = nlohmann::json::parse(js);
	CHECK(j["vars"] == nlohmann::json::array({"x", "y"}));
	invt_poly_free(q);
	REQUIRE(invt_poly_parse(ctx.c, "x,y", "1/2*x", &q) == INVT_OK);
	CHECK(invt_poly_equal(p, q) == 0);
	invt_poly_free(q);
	q = nullptr;
	CHECK(invt_poly_parse(ctx.c, "x", "z", &q) == INVT_EINVAL);
	CHECK(q == nullptr);
	CHECK(invt_poly_from_json(ctx.c, "{\"vars\": 3}", &q) == INVT_EINVAL);
	CHECK(invt_poly_from_json(ctx.c, "not json", &q) == INVT_EINVAL);
	invt_poly_free(p);
}
