#include "invt.h"

#include <CLI11.hpp>

#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

namespace {

struct Globals {
	bool json = false;
	int trunc = -1;
	std::uint64_t seed = 1;
};

int report(invt_context* ctx, int rc, invt_result* res, bool as_json)
{
	if (res) {
		if (as_json)
			std::cout << invt_result_json(res) << "\n";
		else
			std::cout << invt_result_text(res);
		invt_result_free(res);
	}
	switch (rc) {
	case INVT_OK: return 0;
	case INVT_EVERIFY:
		std::cerr << "verification failed\n";
		return 2;
	case INVT_EINVAL:
		std::cerr << "error: " << invt_last_error(ctx) << "\n";
		return 1;
	default:
		std::cerr << "internal error: " << invt_last_error(ctx) << "\n";
		return 1;
	}
}

} // namespace

int main(int argc, char** argv)
{
	CLI::App app{"invt: exact computations in classical invariant theory"};
	app.require_subcommand(1);
	app.fallthrough();
	Globals G;
	app.add_flag("--json", G.json, "Print JSON instead of text");
	app.add_option("--trunc", G.trunc, "Series truncation order (default $INVT_TRUNC or 20)")->check(CLI::NonNegativeNumber);
	app.add_option("--seed", G.seed, "Seed for random configurations");

	std::function<int(invt_context*, invt_result**)> job;

	int d = 0, g = 0, e = 0, n = 0, k = 0, trials = 20, criterion = 0;
	int d2 = 0;
	std::string text, method = "cs", group, rep, fco, gco;
	std::vector<int> h;
	bool bigraded = false, same = false;

	auto* bi = app.add_subcommand("binary-invariants", "Basis of invariants of degree g of binary d-ics");
	bi->add_option("d", d)->required();
	bi->add_option("g", g)->required();
	bi->callback([&] { job = [&](invt_context* c, invt_result** r) { return invt_binary_invariants(c, d, g, r); }; });

	auto* bd = app.add_subcommand("binary-dim", "Dimension of the degree-g invariants of binary d-ics");
	bd->add_option("d", d)->required();
	bd->add_option("g", g)->required();
	bd->add_option("--method", method, "kernel or cs")->check(CLI::IsMember({"kernel", "cs"}));
	bd->callback([&] { job = [&](invt_context* c, invt_result** r) { return invt_binary_dim(c, d, g, method.c_str(), r); }; });

	auto* rey = app.add_subcommand("reynolds", "Project a polynomial in a0..ad onto the invariants");
	rey->add_option("d", d)->required();
	rey->add_option("g", g)->required();
	rey->add_option("poly", text)->required();
	rey->callback([&] { job = [&](invt_context* c, invt_result** r) { return invt_reynolds(c, d, g, text.c_str(), r); }; });

	auto* tv = app.add_subcommand("transvectant", "Transvectant (f,g)_n of binary forms");
	tv->add_option("df", d)->required();
	tv->add_option("dg", d2)->required();
	tv->add_option("n", n)->required();
	tv->add_option("--f", fco, "Coefficients of f, comma separated (default symbolic a_i)");
	tv->add_option("--g", gco, "Coefficients of g, comma separated (default symbolic b_i)");
	tv->add_flag("--same", same, "Use g = f");
	tv->callback([&] {
		job = [&](invt_context* c, invt_result** r) {
			return invt_transvectant(c, d, d2, n, fco.empty() ? nullptr : fco.c_str(), gco.empty() ? nullptr : gco.c_str(),
			                         same ? 1 : 0, r);
		};
	});

	auto* ti = app.add_subcommand("ternary-invariants", "Basis of invariants of degree g of ternary d-ics");
	ti->add_option("d", d)->required();
	ti->add_option("g", g)->required();
	ti->callback([&] { job = [&](invt_context* c, invt_result** r) { return invt_ternary_invariants(c, d, g, r); }; });

	auto* bed = app.add_subcommand("bedratyuk", "Invariant dimension of ternary forms from weight counts");
	bed->add_option("d", d)->required();
	bed->add_option("g", g)->required();
	bed->callback([&] { job = [&](invt_context* c, invt_result** r) { return invt_bedratyuk(c, d, g, r); }; });

	auto* sp = app.add_subcommand("springer", "Hilbert series of covariants of order e");
	sp->add_option("d", d)->required();
	sp->add_option("e", e, "Order (default 0)");
	sp->add_flag("--bigraded", bigraded, "Series in degree z and order w");
	sp->callback([&] {
		job = [&](invt_context* c, invt_result** r) { return invt_springer(c, d, bigraded ? -1 : e, r); };
	});

	auto* mo = app.add_subcommand("molien", "Molien series of a group representation");
	mo->add_option("group", group, "S2, S3, S4, S6 or A6")->required();
	mo->add_option("rep", rep, "Character name, e.g. V2 or X5")->required();
	mo->callback([&] { job = [&](invt_context* c, invt_result** r) { return invt_molien(c, group.c_str(), rep.c_str(), r); }; });

	auto* ho = app.add_subcommand("howe", "Degree-k invariants of d points on the line");
	ho->add_option("d", d)->required();
	ho->add_option("k", k)->required();
	ho->callback([&] { job = [&](invt_context* c, invt_result** r) { return invt_howe(c, d, k, r); }; });

	auto* se = app.add_subcommand("symbolic-expand", "Expand a tableau such as 1122,3344 into coefficients");
	se->add_option("tableau", text, "Rows such as 111122,223333, or brackets such as [12]^4")->required();
	se->callback([&] { job = [&](invt_context* c, invt_result** r) { return invt_symbolic_expand(c, text.c_str(), r); }; });

	auto* st = app.add_subcommand("straighten", "Straighten (ij) graphs or [ij] brackets");
	st->add_option("expr", text)->required();
	st->callback([&] { job = [&](invt_context* c, invt_result** r) { return invt_straighten(c, text.c_str(), r); }; });

	auto* nc = app.add_subcommand("noncrossing", "Noncrossing matchings of d points with valences h");
	nc->add_option("d", d)->required();
	nc->add_option("valences", h, "One valence for all points, or d of them")->required();
	nc->callback([&] {
		job = [&](invt_context* c, invt_result** r) {
			return invt_noncrossing(c, d, h.data(), static_cast<int>(h.size()), r);
		};
	});

	auto* sl = app.add_subcommand("six-line-checks", "Relations among invariants of six points on the line");
	sl->add_option("--trials", trials, "Random configurations per check");
	sl->callback([&] { job = [&](invt_context* c, invt_result** r) { return invt_six_line_checks(c, trials, r); }; });

	auto* sq = app.add_subcommand("six-plane-checks", "Hexahedral relations for six points in the plane");
	sq->add_option("--trials", trials, "Random configurations per check");
	sq->callback([&] { job = [&](invt_context* c, invt_result** r) { return invt_six_plane_checks(c, trials, r); }; });

	auto* sf = app.add_subcommand("selftest", "Run the verification suite");
	sf->add_option("--criterion", criterion, "Run one item (1-16)");
	sf->callback([&] { job = [&](invt_context* c, invt_result** r) { return invt_selftest(c, criterion, r); }; });

	try {
		app.parse(argc, argv);
	} catch (const CLI::CallForHelp& e) {
		return app.exit(e);
	} catch (const CLI::CallForAllHelp& e) {
		return app.exit(e);
	} catch (const CLI::ParseError& e) {
		std::cerr << "error: " << e.what() << "\n\n" << app.help();
		return 1;
	}

	std::unique_ptr<invt_context, decltype(&invt_context_free)> ctx(invt_context_new(), invt_context_free);
	if (G.trunc >= 0)
		invt_context_set_trunc(ctx.get(), G.trunc);
	invt_context_set_seed(ctx.get(), G.seed);
	invt_result* res = nullptr;
	int rc = job(ctx.get(), &res);
	return report(ctx.get(), rc, res, G.json);
}
