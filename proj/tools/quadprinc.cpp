#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "quadprinc/certificate.hpp"

namespace {

using namespace quadprinc;

void write_atomic(const std::string& path, const std::string& data) {
    std::filesystem::path p(path);
    std::filesystem::path tmp = p;
    tmp += ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) throw std::runtime_error("cannot open " + tmp.string());
        os << data;
    }
    std::filesystem::rename(tmp, p);
}

struct OutputOpts {
    std::string out_path;
    bool human = false;
};

void emit(const Json& doc, const OutputOpts& o) {
    std::string text = canonical_dump(doc);
    if (!o.out_path.empty()) write_atomic(o.out_path, text);
    if (o.human)
        std::cout << human_summary(doc);
    else if (o.out_path.empty())
        std::cout << text;
}

std::vector<long> parse_d_list(const std::string& s) {
    std::vector<long> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stol(item));
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact ideal arithmetic and principality certificates for imaginary "
                 "quadratic orders Z[√−d]"};
    app.require_subcommand(1);

    Bounds bounds;
    OutputOpts out;
    int threads = 1;
    bool json_flag = false;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--coord-bound", bounds.coord_bound, "pair-grid coordinate bound");
        sub->add_option("--norm-bound", bounds.norm_bound, "ideal norm bound");
        sub->add_option("--pmax", bounds.pmax, "largest rational prime to scan");
        sub->add_option("--box", bounds.box, "coordinate box for exhaustive element scans");
        sub->add_option("--search-cap", bounds.search_cap, "generator search cap");
        sub->add_option("--threads", threads, "worker threads (output is identical for any count)");
        sub->add_option("--out", out.out_path, "write the JSON certificate to this file");
        sub->add_flag("--human", out.human, "print a human-readable summary to stdout");
        sub->add_flag("--json", json_flag, "print canonical JSON (default)");
    };

    long d = 0;
    std::string check_id;
    std::string d_list;

    CLI::App* c_classify = app.add_subcommand("classify", "decide the PRINC status of Z[√−d]");
    c_classify->add_option("d", d, "positive square-free integer")->required();
    add_common(c_classify);

    CLI::App* c_check = app.add_subcommand(
        "check", "run one verification suite (thm1.3, lem2.3, prop3.1, lem4.1, thm4.2, "
                 "prop4.5, conductor)");
    c_check->add_option("id", check_id, "suite id")->required();
    c_check->add_option("d", d, "positive square-free integer")->required();
    add_common(c_check);

    CLI::App* c_sweep =
        app.add_subcommand("sweep", "classify a comma-separated list of d values");
    c_sweep->add_option("d_list", d_list, "e.g. 1,2,3,7,11")->required();
    add_common(c_sweep);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (c_classify->parsed()) {
            PrincVerdict v = classify(d, bounds.coord_bound, bounds.norm_bound, threads);
            emit(classify_certificate(v, bounds), out);
            return 0;
        }
        if (c_check->parsed()) {
            CheckOutcome oc = run_check(check_id, d, bounds, threads);
            emit(oc.certificate, out);
            return oc.exit_code;
        }
        if (c_sweep->parsed()) {
            emit(sweep_document(parse_d_list(d_list), bounds, threads), out);
            return 0;
        }
    } catch (const ConsistencyError& e) {
        std::cerr << "internal consistency failure: " << e.what() << "\n";
        return 3;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const SearchExhaustedError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
