#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "bredon/motivic.hpp"
#include "bredon/series.hpp"
#include "bredon/spaces.hpp"
#include "bredon/verify.hpp"

using nlohmann::json;
using namespace bredon;

namespace {

std::vector<int> split_ints(const std::string& s, char sep) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, sep)) out.push_back(std::stoi(tok));
    return out;
}

KleinDegree parse_degree(const std::string& s) {
    auto v = split_ints(s, ',');
    if (v.size() != 4) throw CLI::ValidationError("degree must be a,p,b,q");
    return {v[0], v[1], v[2], v[3]};
}

MotivicBidegree parse_bidegree(const std::string& s) {
    auto colon = s.find(':');
    if (colon == std::string::npos)
        throw CLI::ValidationError("bidegree must be a,p:b,q");
    auto top = split_ints(s.substr(0, colon), ',');
    auto wt = split_ints(s.substr(colon + 1), ',');
    if (top.size() != 2 || wt.size() != 2)
        throw CLI::ValidationError("bidegree must be a,p:b,q");
    return {top[0], top[1], wt[0], wt[1]};
}

json motivic_json(const MotivicGroup& g) {
    json j;
    j["degree"] = g.bidegree.str();
    j["dimension"] = g.dimension;
    j["region"] = region_name(g.region);
    j["realization"] = {{"raw", status_name(g.raw)}, {"refined", status_name(g.refined)}};
    if (g.basis) j["basis"] = *g.basis;
    else j["basis"] = nullptr;
    if (g.region == Region::BorelRegion) j["nilpotent_sector"] = g.nilpotent_sector;
    return j;
}

void print_motivic(const MotivicGroup& g, bool as_json) {
    if (as_json) {
        std::cout << motivic_json(g).dump(2) << "\n";
        return;
    }
    std::cout << g.bidegree.str() << ": dim " << g.dimension << ", "
              << region_name(g.region) << ", realization raw=" << status_name(g.raw)
              << " refined=" << status_name(g.refined) << "\n";
    if (g.basis) {
        for (auto& s : *g.basis) std::cout << "  " << s << "\n";
    }
}

struct ScanRow {
    MotivicBidegree d;
    long dim;
    Region region;
    RealizationStatus raw, refined;
    std::string basis;  // ";"-joined, empty when not enumerated
};

int threads_from_env() {
    if (const char* env = std::getenv("BREDON_THREADS")) {
        int n = std::atoi(env);
        if (n >= 1) return n;
    }
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    return hw > 0 ? hw : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"RO(C2xSigma2)-graded Bredon cohomology calculator"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable output");

    std::string degree_arg, bidegree_arg;

    auto* pdim = app.add_subcommand("point-dim", "dimension of H^d(pt)");
    pdim->add_option("--degree", degree_arg, "a,p,b,q")->required();

    auto* pbasis = app.add_subcommand("point-basis", "monomial basis of H^d(pt)");
    pbasis->add_option("--degree", degree_arg, "a,p,b,q")->required();

    std::string lhs, rhs;
    auto* mul = app.add_subcommand("mul", "product in the point ring");
    mul->add_option("lhs", lhs, "element")->required();
    mul->add_option("rhs", rhs, "element")->required();

    std::string from_level = "top", to_level = "bottom";
    auto* restr = app.add_subcommand("restrict", "Mackey restriction");
    restr->add_option("element", lhs, "positive-cone element")->required();
    restr->add_option("--from", from_level, "top|c2|delta|sigma2|bottom");
    restr->add_option("--to", to_level, "top|c2|delta|sigma2|bottom")->required();

    std::string space = "b";
    bool reduced = false;
    auto* sdim = app.add_subcommand("space-dim", "dimension for an auxiliary space");
    sdim->add_option("--space", space, "b|bc2|wq|e|etilde")->required();
    sdim->add_option("--degree", degree_arg, "a,b / a,w / q,a,w / a,p,b,q")->required();
    sdim->add_flag("--reduced", reduced, "reduced cohomology (b only)");

    auto* mot = app.add_subcommand("motivic", "Bredon motivic cohomology of Spec R");
    mot->add_option("--degree", bidegree_arg, "a,p:b,q")->required();

    auto* bor = app.add_subcommand("borel", "Borel motivic cohomology H(EC2)");
    bor->add_option("--degree", bidegree_arg, "a,p:b,q")->required();

    auto* stat = app.add_subcommand("status", "Betti realization status");
    stat->add_option("--degree", bidegree_arg, "a,p:b,q")->required();

    std::string a_range = "0,0", p_range = "0,0", b_range = "-3,3", q_range = "-3,3";
    std::string format = "csv", target = "motivic";
    auto* scan = app.add_subcommand("scan", "tabulate a degree window");
    scan->add_option("--a-range", a_range, "lo,hi");
    scan->add_option("--p-range", p_range, "lo,hi");
    scan->add_option("--b-range", b_range, "lo,hi");
    scan->add_option("--q-range", q_range, "lo,hi");
    scan->add_option("--format", format, "csv|json");
    scan->add_option("--target", target, "point|motivic|borel");

    bool with_dims = false;
    int map_a = 0, map_p = 0;
    std::string map_format = "ascii", out_path;
    auto* rmap = app.add_subcommand("region-map", "weight-plane chart");
    rmap->add_option("--b-range", b_range, "lo,hi");
    rmap->add_option("--q-range", q_range, "lo,hi");
    rmap->add_option("--format", map_format, "ascii|svg");
    rmap->add_flag("--dims", with_dims, "annotate per-cell dimensions");
    rmap->add_option("--a", map_a, "a for --dims");
    rmap->add_option("--p", map_p, "p for --dims");
    rmap->add_option("--out", out_path, "write to file instead of stdout");

    std::string suite = "all";
    auto* ver = app.add_subcommand("verify", "run consistency suites");
    ver->add_option("--suite", suite, "all|series|ses|2q|remarks");

    CLI11_PARSE(app, argc, argv);

    auto level = [](const std::string& s) {
        if (s == "top") return MackeyLevel::Top;
        if (s == "c2") return MackeyLevel::C2Level;
        if (s == "delta") return MackeyLevel::DeltaLevel;
        if (s == "sigma2") return MackeyLevel::Sigma2Level;
        if (s == "bottom") return MackeyLevel::Bottom;
        throw CLI::ValidationError("unknown level " + s);
    };

    try {
        if (pdim->parsed()) {
            KleinDegree d = parse_degree(degree_arg);
            long n = dim_point(d);
            if (as_json)
                std::cout << json{{"degree", d.str()}, {"dimension", n}}.dump() << "\n";
            else
                std::cout << n << "\n";
        } else if (pbasis->parsed()) {
            GroupDescriptor g = group_at(parse_degree(degree_arg));
            if (as_json) {
                json j{{"degree", g.degree.str()}, {"dimension", g.dimension}};
                j["basis"] = g.basis ? json(*g.basis) : json(nullptr);
                std::cout << j.dump() << "\n";
            } else if (g.basis) {
                for (auto& s : *g.basis) std::cout << s << "\n";
            } else {
                std::cout << "dimension " << g.dimension
                          << " (no basis enumeration in this sector)\n";
            }
        } else if (mul->parsed()) {
            ProductResult p = multiply(F2Element::parse(lhs), F2Element::parse(rhs));
            if (auto* e = std::get_if<F2Element>(&p)) {
                if (as_json)
                    std::cout << json{{"product", e->str()}}.dump() << "\n";
                else
                    std::cout << e->str() << "\n";
            } else {
                if (as_json) std::cout << json{{"product", nullptr}}.dump() << "\n";
                else std::cout << "unknown\n";
                return 0;
            }
        } else if (restr->parsed()) {
            F2Element e = mackey_restrict(level(from_level), level(to_level),
                                          F2Element::parse(lhs));
            std::cout << e.str() << "\n";
        } else if (sdim->parsed()) {
            auto v = split_ints(degree_arg, ',');
            long n = 0;
            if (space == "b" && v.size() == 2)
                n = reduced ? b_space_reduced_dim(v[0], v[1]) : b_space_dim(v[0], v[1]);
            else if (space == "bc2" && v.size() == 2)
                n = bc2_motivic_dim(v[0], v[1]);
            else if (space == "wq" && v.size() == 3)
                n = w_q_motivic_dim(v[0], v[1], v[2]);
            else if (space == "e" && v.size() == 4)
                n = e_space_dim({v[0], v[1], v[2], v[3]});
            else if (space == "etilde" && v.size() == 4)
                n = etilde_space_dim({v[0], v[1], v[2], v[3]});
            else
                throw CLI::ValidationError("bad --space/--degree combination");
            if (as_json)
                std::cout << json{{"space", space}, {"degree", degree_arg},
                                  {"dimension", n}}.dump() << "\n";
            else
                std::cout << n << "\n";
        } else if (mot->parsed()) {
            print_motivic(motivic_group_R(parse_bidegree(bidegree_arg)), as_json);
        } else if (bor->parsed()) {
            print_motivic(borel_group(parse_bidegree(bidegree_arg)), as_json);
        } else if (stat->parsed()) {
            MotivicBidegree d = parse_bidegree(bidegree_arg);
            auto [raw, refined] = realization_status(d);
            if (as_json)
                std::cout << json{{"degree", d.str()}, {"raw", status_name(raw)},
                                  {"refined", status_name(refined)}}.dump() << "\n";
            else
                std::cout << "raw=" << status_name(raw)
                          << " refined=" << status_name(refined) << "\n";
        } else if (scan->parsed()) {
            auto ar = split_ints(a_range, ','), pr = split_ints(p_range, ','),
                 br = split_ints(b_range, ','), qr = split_ints(q_range, ',');
            if (ar.size() != 2 || pr.size() != 2 || br.size() != 2 || qr.size() != 2)
                throw CLI::ValidationError("ranges must be lo,hi");
            std::vector<MotivicBidegree> degs;
            for (int a = ar[0]; a <= ar[1]; ++a)
                for (int p = pr[0]; p <= pr[1]; ++p)
                    for (int b = br[0]; b <= br[1]; ++b)
                        for (int q = qr[0]; q <= qr[1]; ++q)
                            degs.push_back({a, p, b, q});
            std::vector<ScanRow> rows(degs.size());
            int nthreads = std::min<int>(threads_from_env(),
                                         std::max<size_t>(degs.size(), 1));
            std::atomic<size_t> next{0};
            auto work = [&] {
                for (size_t i; (i = next.fetch_add(1)) < degs.size();) {
                    MotivicBidegree d = degs[i];
                    ScanRow& row = rows[i];
                    row.d = d;
                    if (target == "point") {
                        KleinDegree k{d.a, d.p, d.b, d.q};
                        GroupDescriptor g = group_at(k);
                        row.dim = g.dimension;
                        row.region = region_of(d);
                        row.raw = row.refined = RealizationStatus::Iso;
                        if (g.basis) {
                            std::string acc;
                            for (auto& s : *g.basis)
                                acc += (acc.empty() ? "" : ";") + s;
                            row.basis = acc;
                        }
                    } else {
                        MotivicGroup g = target == "borel" ? borel_group(d)
                                                           : motivic_group_R(d);
                        row.dim = g.dimension;
                        row.region = g.region;
                        row.raw = g.raw;
                        row.refined = g.refined;
                        if (g.basis) {
                            std::string acc;
                            for (auto& s : *g.basis)
                                acc += (acc.empty() ? "" : ";") + s;
                            row.basis = acc;
                        }
                    }
                }
            };
            std::vector<std::thread> pool;
            for (int t = 1; t < nthreads; ++t) pool.emplace_back(work);
            work();
            for (auto& t : pool) t.join();
            if (format == "json") {
                json out = json::array();
                for (auto& r : rows) {
                    json j{{"degree", r.d.str()}, {"dimension", r.dim},
                           {"region", region_name(r.region)},
                           {"status", status_name(r.refined)}};
                    j["basis"] = r.basis.empty() ? json(nullptr) : json(r.basis);
                    out.push_back(std::move(j));
                }
                std::cout << out.dump(2) << "\n";
            } else {
                std::cout << "a,p,b,q,dimension,region,status,basis\n";
                for (auto& r : rows)
                    std::cout << r.d.a << "," << r.d.p << "," << r.d.b << ","
                              << r.d.q << "," << r.dim << ","
                              << region_name(r.region) << ","
                              << status_name(r.refined) << ",\"" << r.basis
                              << "\"\n";
            }
        } else if (rmap->parsed()) {
            auto br = split_ints(b_range, ','), qr = split_ints(q_range, ',');
            if (br.size() != 2 || qr.size() != 2)
                throw CLI::ValidationError("ranges must be lo,hi");
            std::string body =
                map_format == "svg"
                    ? render_region_map_svg(br[0], br[1], qr[0], qr[1])
                    : render_region_map_ascii(br[0], br[1], qr[0], qr[1],
                                              with_dims, map_a, map_p);
            if (out_path.empty()) {
                std::cout << body;
            } else {
                std::ofstream f(out_path, std::ios::binary);
                f << body;
            }
        } else if (ver->parsed()) {
            std::vector<CheckReport> reports;
            if (suite == "all") reports = run_all_checks();
            else if (suite == "2q") reports = {check_theorem_2q(-10, 5, 5, 5)};
            else if (suite == "ses") reports = {check_split_ses(8, 4, 8, 4)};
            else if (suite == "series") reports = {check_series_vs_basis(5)};
            else if (suite == "remarks") reports = {check_remark_examples()};
            else throw CLI::ValidationError("unknown suite " + suite);
            bool all_ok = true;
            json jout = json::array();
            for (auto& r : reports) {
                all_ok = all_ok && r.ok();
                if (as_json) {
                    jout.push_back({{"name", r.name}, {"window", r.window},
                                    {"pass", r.pass}, {"fail", r.fail},
                                    {"counterexamples", r.counterexamples}});
                } else {
                    std::cout << (r.ok() ? "PASS" : "FAIL") << " " << r.name
                              << " [" << r.window << "] pass=" << r.pass
                              << " fail=" << r.fail << "\n";
                    for (auto& c : r.counterexamples) std::cout << "    " << c << "\n";
                }
            }
            if (as_json) std::cout << jout.dump(2) << "\n";
            return all_ok ? 0 : 1;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const IllFormed& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
