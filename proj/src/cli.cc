// Copyright 2026 The modlat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "modlat/cli.h"

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "modlat/enumerate.h"
#include "modlat/modular_data.h"
#include "modlat/serialize.h"

namespace modlat::cli {

namespace {

class UsageError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw UsageError("cannot open '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string &text, const std::string &path, std::ostream &out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f || !(f << text)) {
        throw UsageError("cannot write '" + path + "'");
    }
}

ModularData load_data(const std::string &path) {
    return parse_modular_data(read_file(path));
}

std::string format_double(double x) {
    if (std::fabs(x) < 5e-10) {
        x = 0.0;
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9f", x);
    return buf;
}

std::string format_approx(const Cyclotomic &c) {
    auto z = c.approx_complex();
    std::string im = format_double(z.imag());
    if (im[0] != '-') {
        im = "+" + im;
    }
    return format_double(z.real()) + im + "i";
}

std::string show(const ModularData &md, bool approx) {
    std::ostringstream out;
    const std::size_t n = md.rank();
    auto join = [](const std::vector<std::string> &xs) {
        std::string s;
        for (std::size_t i = 0; i < xs.size(); i++) {
            s += (i == 0 ? "" : ", ") + xs[i];
        }
        return s;
    };
    std::vector<std::string> labels;
    std::vector<std::string> dims;
    std::vector<std::string> twists;
    for (std::size_t i = 0; i < n; i++) {
        labels.push_back(md.label_names().empty() ? std::to_string(i) : md.label_names()[i]);
        dims.push_back(md.s_tilde()(0, i).str());
        twists.push_back(md.twists()[i].root_str());
    }
    GaussData g = gauss_data(md);
    out << "rank: " << n << "\n";
    out << "labels: " << join(labels) << "\n";
    out << "quantum dimensions: " << join(dims) << "\n";
    out << "D^2: " << g.d_squared.str() << "\n";
    out << "p+: " << g.p_plus.str() << "\n";
    out << "p-: " << g.p_minus.str() << "\n";
    out << "twists: " << join(twists) << "\n";
    out << "s_tilde:\n";
    for (std::size_t i = 0; i < n; i++) {
        std::vector<std::string> row;
        for (std::size_t j = 0; j < n; j++) {
            row.push_back(md.s_tilde()(i, j).str());
        }
        out << "  " << join(row) << "\n";
    }
    if (md.provenance()) {
        out << "provenance:\n";
        for (std::size_t i = 0; i < md.provenance()->dim(); i++) {
            std::vector<std::string> row;
            for (std::size_t j = 0; j < md.provenance()->dim(); j++) {
                row.push_back((*md.provenance())(i, j).get_str());
            }
            out << "  " << join(row) << "\n";
        }
    }
    if (approx) {
        std::vector<std::string> at;
        for (const auto &t : md.twists()) {
            at.push_back(format_approx(t));
        }
        out << "approx p+: " << format_approx(g.p_plus) << "\n";
        out << "approx p-: " << format_approx(g.p_minus) << "\n";
        out << "approx twists: " << join(at) << "\n";
        out << "approx s_tilde:\n";
        for (std::size_t i = 0; i < n; i++) {
            std::vector<std::string> row;
            for (std::size_t j = 0; j < n; j++) {
                row.push_back(format_approx(md.s_tilde()(i, j)));
            }
            out << "  " << join(row) << "\n";
        }
    }
    return out.str();
}

std::vector<Label> parse_colors(const std::string &text) {
    std::vector<Label> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(item, &used);
        } catch (const std::exception &) {
            throw UsageError("bad color '" + item + "'");
        }
        if (used != item.size() || item.empty() || item[0] == '-') {
            throw UsageError("bad color '" + item + "'");
        }
        out.push_back(v);
    }
    return out;
}

int exit_code_for(const ModularDataError &e) {
    switch (e.kind()) {
        case ModularDataError::Kind::NonIntegralFusion:
        case ModularDataError::Kind::NotModular:
        case ModularDataError::Kind::NotProbabilistic:
            return kExitVerificationFailed;
        default:
            return kExitUsage;
    }
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Pointed modular data from even lattices, verified in exact arithmetic", "modlat"};
    app.require_subcommand(1);

    std::string b_file;
    std::string out_file;
    auto *construct = app.add_subcommand("construct", "Build modular data G_B from a Gram matrix file");
    construct->add_option("--b", b_file, "Gram matrix file")->required();
    construct->add_option("--out", out_file, "Write the document here instead of stdout");

    std::string data_file;
    auto *verify_cmd = app.add_subcommand("verify", "Check Gauss identity, unitarity, Verlinde integrality, SL(2,Z)");
    verify_cmd->add_option("--data", data_file, "Modular data document")->required();

    Label fi = 0;
    Label fj = 0;
    auto *fusion = app.add_subcommand("fusion", "Fusion outcomes of i x j and their probabilities");
    fusion->add_option("--data", data_file, "Modular data document")->required();
    fusion->add_option("--i", fi, "First label")->required();
    fusion->add_option("--j", fj, "Second label")->required();

    std::string linking_file;
    std::string colors;
    auto *link = app.add_subcommand("link", "Colored framed-link invariant");
    link->add_option("--data", data_file, "Modular data document")->required();
    link->add_option("--linking", linking_file, "Linking matrix file, framings on the diagonal")->required();
    link->add_option("--colors", colors, "Comma-separated labels, one per component")->required();

    CorpusSpec spec;
    long max_rank = 0;
    auto *enumerate = app.add_subcommand("enumerate", "Classify pointed modular data from a Gram-matrix corpus");
    enumerate->add_option("--max-dim", spec.max_dim, "Largest matrix dimension")->required()->check(CLI::PositiveNumber);
    enumerate->add_option("--max-entry", spec.max_entry, "Bound on |entries|")->required()->check(CLI::PositiveNumber);
    enumerate->add_option("--max-rank", max_rank, "Cap on |det B|; also raises the canonical-form rank bound")
        ->check(CLI::PositiveNumber);

    bool approx = false;
    auto *show_cmd = app.add_subcommand("show", "Pretty-print modular data and derived quantities");
    show_cmd->add_option("--data", data_file, "Modular data document")->required();
    show_cmd->add_flag("--approx", approx, "Append floating-point approximations");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (*construct) {
            GramMatrix b = parse_gram_matrix(read_file(b_file));
            write_output(serialize(from_lattice(b)), out_file, out);
            return kExitOk;
        }
        if (*verify_cmd) {
            Report report = verify(load_data(data_file));
            out << serialize(report);
            return report.all_passed() ? kExitOk : kExitVerificationFailed;
        }
        if (*fusion) {
            ModularData md = load_data(data_file);
            FusionTensor ft = verlinde_fusion(md);
            auto outcomes = fusion_probabilities(md, ft, fi, fj);
            out << "fusion " << fi << " x " << fj << "\n";
            for (const auto &o : outcomes) {
                out << o.label << ": N = " << ft(fi, fj, o.label) << ", P = " << to_string(o.probability) << "\n";
            }
            return kExitOk;
        }
        if (*link) {
            ModularData md = load_data(data_file);
            IntMatrix linking = parse_int_matrix(read_file(linking_file));
            FramedLink fl(std::move(linking), parse_colors(colors));
            out << colored_link_invariant(md, fl).str() << "\n";
            return kExitOk;
        }
        if (*enumerate) {
            if (enumerate->count("--max-rank") > 0) {
                spec.max_rank = max_rank;
            }
            std::size_t bound = spec.max_rank ? static_cast<std::size_t>(std::max<long>(*spec.max_rank, 8))
                                              : kDefaultCanonicalRankBound;
            Classification c = classify(generate_gram_matrices(spec), bound);
            out << format_classification(c);
            return kExitOk;
        }
        if (*show_cmd) {
            out << show(load_data(data_file), approx);
            return kExitOk;
        }
    } catch (const ParseError &e) {
        err << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ValidationError &e) {
        err << "validation error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const LatticeError &e) {
        err << "invalid matrix: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ModularDataError &e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const UsageError &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace modlat::cli
