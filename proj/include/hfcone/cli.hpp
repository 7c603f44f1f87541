#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hfcone/detectors.hpp"
#include "hfcone/io.hpp"
#include "hfcone/subquotient.hpp"
#include "hfcone/surgery_cone.hpp"
#include "hfcone/twisted_cone.hpp"

namespace hfcone::cli {

using nlohmann::json;

enum ExitCode : int { kOk = 0, kImpossible = 1, kInputError = 2 };

struct SRange {
    int lo = 0;
    int hi = 0;
};

/// "a..b" or a single integer.
inline std::optional<SRange> parse_s_range(const std::string& text) {
    auto dots = text.find("..");
    if (dots == std::string::npos) {
        auto v = detail::parse_int(text);
        if (!v) return std::nullopt;
        return SRange{*v, *v};
    }
    auto lo = detail::parse_int(text.substr(0, dots));
    auto hi = detail::parse_int(text.substr(dots + 2));
    if (!lo || !hi || *lo > *hi) return std::nullopt;
    return SRange{*lo, *hi};
}

/// "-1:1,3:2" -> {-1: 1, 3: 2}.
inline std::optional<std::map<Rational, std::size_t>> parse_red_map(const std::string& text) {
    std::map<Rational, std::size_t> out;
    if (text.empty()) return out;
    std::size_t start = 0;
    for (;;) {
        auto comma = text.find(',', start);
        auto item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        auto colon = item.rfind(':');
        if (colon == std::string::npos) return std::nullopt;
        auto k = Rational::parse(item.substr(0, colon));
        auto v = detail::parse_int(item.substr(colon + 1));
        if (!k || !v || *v < 0) return std::nullopt;
        if (*v > 0) out[*k] += static_cast<std::size_t>(*v);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

/// Right-aligned text table.
class Table {
public:
    explicit Table(std::vector<std::string> headers) : headers_(std::move(headers)) {}

    void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

    void print(std::ostream& os) const {
        std::vector<std::size_t> width(headers_.size());
        for (std::size_t c = 0; c < headers_.size(); ++c) {
            width[c] = headers_[c].size();
            for (const auto& r : rows_) width[c] = std::max(width[c], r[c].size());
        }
        auto line = [&](const std::vector<std::string>& r) {
            for (std::size_t c = 0; c < r.size(); ++c) {
                os << (c ? "  " : "") << std::setw(static_cast<int>(width[c])) << r[c];
            }
            os << "\n";
        };
        line(headers_);
        for (const auto& r : rows_) line(r);
    }

private:
    std::vector<std::string> headers_;
    std::vector<std::vector<std::string>> rows_;
};

inline json graded_json(const std::map<Rational, std::size_t>& m) {
    json j = json::object();
    for (const auto& [k, v] : m) j[k.str()] = v;
    return j;
}

inline std::string graded_text(const std::map<Rational, std::size_t>& m) {
    if (m.empty()) return "{}";
    std::string s;
    for (const auto& [k, v] : m) s += (s.empty() ? "" : " ") + k.str() + ":" + std::to_string(v);
    return s;
}

inline json verdict_json(const std::string& command, const Verdict& v) {
    json w = json::object();
    for (const auto& [k, val] : v.witness) {
        std::visit([&](const auto& x) { w[k] = x; }, val);
    }
    return {{"command", command}, {"kind", to_string(v.kind)}, {"statement", v.statement}, {"witness", w}};
}

inline void print_verdict(std::ostream& out, const Verdict& v) {
    out << to_string(v.kind) << ": " << v.statement << "\n";
    for (const auto& [k, val] : v.witness) {
        out << "  " << k << " = ";
        std::visit([&](const auto& x) { out << x; }, val);
        out << "\n";
    }
}

inline std::string complex_title(const KnotComplex& c) { return c.id + " (spinc=" + c.spinc_label + ")"; }

/// Entry point shared by the executable and the tests.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Heegaard Floer homology of 0-surgery from knot complex models"};
    app.require_subcommand(1);
    bool machine = false;
    app.add_flag("--machine", machine, "Emit one JSON record per result");

    std::function<int()> action;
    auto emit = [&](const json& j) { out << j.dump() << "\n"; };

    // check
    auto* check = app.add_subcommand("check", "Parse and validate complex files");
    std::vector<std::string> check_files;
    check->add_option("files", check_files, "Input files")->required()->check(CLI::ExistingFile);
    check->callback([&] {
        action = [&] {
            for (const auto& f : check_files) {
                for (const auto& c : load_document(f).complexes) {
                    std::string flip = c.flip ? "given" : "none";
                    if (!c.flip) {
                        try {
                            (void)derive_flip(c);
                            flip = "derivable";
                        } catch (const NoFlipFound&) {
                        }
                    }
                    if (machine) {
                        emit({{"command", "check"}, {"id", c.id}, {"spinc", c.spinc_label}, {"valid", true},
                              {"generators", c.generators.size()}, {"flip", flip}});
                    } else {
                        out << "OK  " << complex_title(c) << "  generators=" << c.generators.size()
                            << "  flip=" << flip << "\n";
                    }
                }
            }
            return int{kOk};
        };
    });

    // cone
    auto* cone = app.add_subcommand("cone", "Homology of the 0-surgery mapping cone");
    std::string cone_file;
    std::string s_text = "0";
    std::string flavor = "hat";
    std::string truncation = "auto";
    bool twisted = false;
    cone->add_option("file", cone_file, "Input file")->required()->check(CLI::ExistingFile);
    cone->add_option("--s", s_text, "Spin^c index s or range a..b")->allow_extra_args(false);
    cone->add_option("--flavor", flavor, "hat or plus")->check(CLI::IsMember({"hat", "plus"}));
    cone->add_option("--truncation", truncation, "U-truncation height N or 'auto' (plus flavor)");
    cone->add_flag("--twisted", twisted, "Twisted coefficients in F2[T,T^-1]");
    cone->callback([&] {
        action = [&]() -> int {
            auto range = parse_s_range(s_text);
            if (!range) throw Error("bad --s value '" + s_text + "'");
            if (twisted && flavor != "hat") throw Error("--twisted is available for the hat flavor only");
            std::optional<int> fixed;
            if (truncation != "auto") {
                auto n = detail::parse_int(truncation);
                if (!n || *n < 0) throw Error("bad --truncation value '" + truncation + "'");
                fixed = *n;
            }
            for (const auto& raw : load_document(cone_file).complexes) {
                const auto c = ensure_flip(raw);
                if (twisted) {
                    Table t({"s", "novikov_dim", "free_rank", "torsion"});
                    for (int s = range->lo; s <= range->hi; ++s) {
                        auto r = twisted_homology_laurent(c, s);
                        json tors = json::array();
                        std::string tors_text;
                        for (const auto& f : r.torsion_factors) {
                            tors.push_back(f.str());
                            tors_text += (tors_text.empty() ? "" : ", ") + f.str();
                        }
                        if (machine) {
                            emit({{"command", "cone"}, {"flavor", "hat"}, {"twisted", true}, {"id", c.id},
                                  {"spinc", c.spinc_label}, {"s", s}, {"novikov_dim", r.novikov_dim},
                                  {"laurent_free_rank", r.laurent_free_rank}, {"torsion_factors", tors}});
                        }
                        t.add({std::to_string(s), std::to_string(r.novikov_dim), std::to_string(r.laurent_free_rank),
                               tors_text.empty() ? "-" : tors_text});
                    }
                    if (!machine) {
                        out << complex_title(c) << ", twisted hat cone\n";
                        t.print(out);
                    }
                } else if (flavor == "hat") {
                    Table t({"s", "dim_A", "dim_B", "rank_v", "rank_h", "rank_v+h", "total"});
                    std::optional<std::map<Rational, std::size_t>> graded;
                    for (int s = range->lo; s <= range->hi; ++s) {
                        auto r = cone_homology_hat(c, s);
                        if (r.graded_dims) graded = r.graded_dims;
                        if (machine) {
                            json j{{"command", "cone"}, {"flavor", "hat"}, {"twisted", false}, {"id", c.id},
                                   {"spinc", c.spinc_label}, {"s", s}, {"total_dim", r.total_dim},
                                   {"dim_a", r.dim_a}, {"dim_b", r.dim_b}, {"rank_v", r.rank_v},
                                   {"rank_h", r.rank_h}, {"rank_v_plus_h", r.rank_v_plus_h}};
                            if (r.graded_dims) j["graded_dims"] = graded_json(*r.graded_dims);
                            emit(j);
                        }
                        t.add({std::to_string(s), std::to_string(r.dim_a), std::to_string(r.dim_b),
                               std::to_string(r.rank_v), std::to_string(r.rank_h), std::to_string(r.rank_v_plus_h),
                               std::to_string(r.total_dim)});
                    }
                    if (!machine) {
                        out << complex_title(c) << ", hat cone\n";
                        t.print(out);
                        if (graded) out << "graded (s=0): " << graded_text(*graded) << "\n";
                    }
                } else {
                    Table t({"s", "N", "total", "reduced", "ker_U"});
                    for (int s = range->lo; s <= range->hi; ++s) {
                        auto r = cone_homology_plus_truncated(c, s, fixed);
                        if (machine) {
                            json j{{"command", "cone"}, {"flavor", "plus"}, {"twisted", false}, {"id", c.id},
                                   {"spinc", c.spinc_label}, {"s", s}, {"truncation", r.truncation}};
                            if (r.total_dim) {
                                j["total_dim"] = *r.total_dim;
                            } else {
                                j["reduced"] = graded_json(r.reduced);
                                j["u_kernel"] = graded_json(r.u_kernel);
                            }
                            emit(j);
                        }
                        t.add({std::to_string(s), std::to_string(r.truncation),
                               r.total_dim ? std::to_string(*r.total_dim) : "-",
                               r.total_dim ? "-" : graded_text(r.reduced), r.total_dim ? "-" : graded_text(r.u_kernel)});
                    }
                    if (!machine) {
                        out << complex_title(c) << ", plus cone (U-truncated)\n";
                        t.print(out);
                    }
                }
            }
            return kOk;
        };
    });

    // Commands taking a single file.
    auto file_command = [&](const char* name, const char* help, std::string& file) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("file", file, "Input file")->required()->check(CLI::ExistingFile);
        return sub;
    };

    std::string genus_file;
    file_command("genus", "Genus from the v_s maps", genus_file)->callback([&] {
        action = [&] {
            auto doc = load_document(genus_file);
            const int g = genus(doc.complexes);
            if (machine) {
                emit({{"command", "genus"}, {"genus", g}, {"covered", detail::spinc_list(doc.complexes)}});
            } else {
                out << "genus = " << g << "\n";
            }
            return int{kOk};
        };
    });

    std::string alex_file;
    file_command("alex", "Alexander polynomial mod 2", alex_file)->callback([&] {
        action = [&] {
            for (const auto& c : load_document(alex_file).complexes) {
                auto r = alexander_polynomial(c);
                if (machine) {
                    json dims = json::object();
                    for (const auto& [a, d] : r.hfk_dims) dims[std::to_string(a)] = d;
                    emit({{"command", "alex"}, {"id", c.id}, {"spinc", c.spinc_label},
                          {"polynomial", r.polynomial.str()}, {"trivial_mod_2", r.trivial_mod_2}, {"hfk_dims", dims}});
                } else {
                    out << complex_title(c) << ": Delta = " << r.polynomial.str() << " (mod 2), "
                        << (r.trivial_mod_2 ? "trivial" : "nontrivial") << "\n";
                }
            }
            return int{kOk};
        };
    });

    auto verdict_command = [&](const char* name, const char* help, std::string& file,
                               std::function<Verdict(const std::vector<KnotComplex>&)> fn) {
        file_command(name, help, file)->callback([&, name, fn] {
            action = [&, name, fn] {
                auto v = fn(load_document(file).complexes);
                if (machine) {
                    emit(verdict_json(name, v));
                } else {
                    print_verdict(out, v);
                }
                return int{kOk};
            };
        });
    };
    std::string sphere_file;
    verdict_command("detect-sphere", "Twisted obstruction to a non-separating sphere", sphere_file,
                    [](const auto& cs) { return sphere_obstruction(cs); });
    std::string prop_file;
    verdict_command("prop0check", "Necessary conditions for Y_0(K) = N # S^2 x S^1", prop_file,
                    [](const auto& cs) { return check_prop_0surgery(cs); });

    std::string red_file;
    std::string red_truncation = "auto";
    file_command("red", "Graded HF_red of the ambient manifold", red_file)
        ->add_option("--truncation", red_truncation, "U-truncation height N or 'auto'");
    app.get_subcommand("red")->callback([&] {
        action = [&]() -> int {
            std::optional<int> fixed;
            if (red_truncation != "auto") {
                auto n = detail::parse_int(red_truncation);
                if (!n || *n < 0) throw Error("bad --truncation value '" + red_truncation + "'");
                fixed = *n;
            }
            for (const auto& c : load_document(red_file).complexes) {
                auto r = hf_red_graded(c, fixed);
                if (machine) {
                    emit({{"command", "red"}, {"id", c.id}, {"spinc", c.spinc_label}, {"truncation", r.truncation},
                          {"dims", graded_json(r.dims)}});
                } else {
                    out << complex_title(c) << ": HF_red = " << graded_text(r.dims) << "  (N=" << r.truncation
                        << ")\n";
                }
            }
            return kOk;
        };
    });

    // verdict
    auto* verdict = app.add_subcommand("verdict", "Compare dim HF-hat(Y) and dim HF-hat(N)");
    std::int64_t dim_y = 0;
    std::int64_t dim_n = 0;
    verdict->add_option("--dim-y", dim_y, "dim HF-hat(Y)")->required();
    verdict->add_option("--dim-n", dim_n, "dim HF-hat(N)")->required();
    verdict->callback([&] {
        action = [&] {
            auto v = theorem1_verdict(dim_y, dim_n);
            if (machine) {
                emit(verdict_json("verdict", v));
            } else {
                print_verdict(out, v);
            }
            return v.str_at("outcome") == "impossible" ? int{kImpossible} : int{kOk};
        };
    });

    // red1
    auto* red1 = app.add_subcommand("red1", "HF_red obstruction to S^2 x S^1 surgeries");
    std::string red1_file;
    std::string red1_map;
    bool homology_sphere = false;
    auto* from_file = red1->add_option("--from-file", red1_file, "Complex file for Y")->check(CLI::ExistingFile);
    auto* from_map = red1->add_option("--red", red1_map, "Graded HF_red as grading:count,...");
    from_file->excludes(from_map);
    red1->add_flag("--homology-sphere", homology_sphere, "Y is an integral homology sphere");
    red1->callback([&] {
        action = [&]() -> int {
            std::map<Rational, std::size_t> red;
            if (!red1_file.empty()) {
                auto doc = load_document(red1_file);
                if (doc.complexes.size() != 1) throw Error("--from-file expects exactly one Spin^c complex");
                red = hf_red_graded(doc.complexes.front()).dims;
            } else if (from_map->count() > 0) {
                auto parsed = parse_red_map(red1_map);
                if (!parsed) throw Error("bad --red value '" + red1_map + "'");
                red = *parsed;
            } else {
                throw Error("red1 needs --from-file or --red");
            }
            auto v = prop_red1_obstruction(red, homology_sphere);
            if (machine) {
                emit(verdict_json("red1", v));
            } else {
                print_verdict(out, v);
            }
            return kOk;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? int{kOk} : int{kInputError};
    }
    try {
        return action ? action() : int{kInputError};
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
}

}  // namespace hfcone::cli
