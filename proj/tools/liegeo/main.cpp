/* Copyright 2026 The liegeo Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */
// liegeo: command-line front end.
//
// Exit codes: 0 ok, 1 usage or input, 2 capacity, 3 internal invariant.

#include <fstream>
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "commands.hpp"
#include "liegeo/error.hpp"
#include "liegeo/geometry.hpp"

namespace {

enum Exit { kOk = 0, kInput = 1, kCapacity = 2, kInternal = 3 };

using liegeo::cli::RunConfig;

void common_options(CLI::App* sub, RunConfig& cfg, bool takes_system) {
    if (takes_system) sub->add_option("--system", cfg.systems, "system file")->check(CLI::ExistingFile);
    sub->add_option("--field", cfg.field, "field spec, e.g. GF(3); overrides the algebra line");
    sub->add_option("--budget", cfg.budget, "point budget (default LIEGEO_BUDGET or 2^22)")
        ->check(CLI::Range(uint64_t{1}, ~uint64_t{0}));
    sub->add_option("--out", cfg.out, "write the report here instead of stdout");
    std::map<std::string, liegeo::cli::Format> formats{{"text", liegeo::cli::Format::Text},
                                                       {"machine", liegeo::cli::Format::Machine}};
    sub->add_option("--format", cfg.format, "text or machine")->transform(CLI::CheckedTransformer(formats));
}

void trunc_option(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--trunc", cfg.trunc, "window degree")->check(CLI::PositiveNumber);
}

void bound_option(CLI::App* sub, RunConfig& cfg, const std::string& what) {
    sub->add_option("--bound", cfg.bound, what)->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"liegeo: equations over free and free metabelian Lie algebras"};
    app.require_subcommand(1);
    RunConfig cfg;
    cfg.budget = liegeo::default_point_budget();

    auto* solve = app.add_subcommand("solve", "enumerate V(S) over a window or a polytope");
    common_options(solve, cfg, true);
    trunc_option(solve, cfg);

    auto* radical = app.add_subcommand("radical", "degree-bounded radical of V(S)");
    common_options(radical, cfg, true);
    trunc_option(radical, cfg);
    bound_option(radical, cfg, "degree bound in A[X]");

    auto* decompose = app.add_subcommand("decompose", "irreducible components of V(S)");
    common_options(decompose, cfg, true);
    trunc_option(decompose, cfg);
    bound_option(decompose, cfg, "degree bound of the radicals");

    auto* reduce = app.add_subcommand("reduce", "polynomial system over k for a polytope system");
    common_options(reduce, cfg, true);

    auto* lift = app.add_subcommand("lift", "Lie system for a polynomial system over a polytope");
    common_options(lift, cfg, true);
    lift->add_option("--poly", cfg.poly_path, "polynomial system file")->check(CLI::ExistingFile)->required();

    auto* classify = app.add_subcommand("classify1", "classify a one-variable system over a free algebra");
    classify->alias("classify");
    common_options(classify, cfg, true);
    bound_option(classify, cfg, "search degree");

    auto* axioms = app.add_subcommand("axioms", "metabelian axiom suite on a window");
    common_options(axioms, cfg, false);
    trunc_option(axioms, cfg);
    axioms->add_option("--carrier", cfg.carrier, "mb|metabelian|free|abelian|heisenberg|nonqw[:n]");
    axioms->add_option("--rank", cfg.rank, "rank (dimension for abelian)")->check(CLI::PositiveNumber);
    axioms->add_option("--phi4-rank", cfg.phi4_rank, "r in the independence axiom (default --rank)")
        ->check(CLI::NonNegativeNumber);
    axioms->add_option("--action", cfg.actions, "polynomial in x1..xr for the action axiom (repeatable)");
    axioms->add_option("--module", cfg.module, "free module rank for metabelian extensions");

    auto* geoeq = app.add_subcommand("geoeq", "compare radicals of a corpus over two carriers");
    common_options(geoeq, cfg, true);
    trunc_option(geoeq, cfg);
    bound_option(geoeq, cfg, "degree bound of the radicals");
    geoeq->add_option("--left", cfg.carrier, "first carrier kind[:n]")->required();
    geoeq->add_option("--right", cfg.carrier2, "second carrier kind[:n]")->required();
    geoeq->add_option("--trunc2", cfg.trunc2, "window degree of the second carrier")->check(CLI::PositiveNumber);
    geoeq->add_option("--rank", cfg.rank, "default rank for carriers given without one")
        ->check(CLI::PositiveNumber);

    auto* dims = app.add_subcommand("dims", "homogeneous dimensions and coordinate-algebra dimension");
    common_options(dims, cfg, true);
    bound_option(dims, cfg, "largest degree");
    dims->add_option("--rank", cfg.rank, "rank")->check(CLI::PositiveNumber);
    dims->add_option("--module", cfg.module, "free module rank s for F + R^s");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kInput;
    }
    cfg.command = app.get_subcommands().front()->get_name();

    try {
        auto out = liegeo::cli::run_command(cfg);
        std::string text = liegeo::cli::render_report(out.report, cfg.format, out.exchange_key);
        if (cfg.out.empty()) {
            std::cout << text;
        } else {
            std::ofstream f(cfg.out, std::ios::binary);
            if (!f) {
                std::cerr << "liegeo: " << cfg.out << ": cannot write\n";
                return kInput;
            }
            f << text;
        }
        return kOk;
    } catch (const liegeo::cli::InputError& e) {
        std::cerr << "liegeo: " << e.what() << "\n";
        return kInput;
    } catch (const liegeo::Error& e) {
        std::cerr << "liegeo: " << e.what() << "\n";
        switch (e.code()) {
            case liegeo::ErrorCode::CapacityExceeded:
                return kCapacity;
            case liegeo::ErrorCode::InvariantViolation:
                return kInternal;
            default:
                return kInput;
        }
    } catch (const std::exception& e) {
        std::cerr << "liegeo: internal error: " << e.what() << "\n";
        return kInternal;
    }
}
