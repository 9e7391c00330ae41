// Command-line front end: idempotent caches, variable-count tables, SDP-to-LP
// conversion, the exact LP solver, oracle verification, and the three
// worked applications.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "wbsdp/apps.hpp"
#include "wbsdp/multiplicity.hpp"

using namespace wbsdp;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitVerification = 3;

std::string cacheDirectory(const std::string& flagValue) {
    if (!flagValue.empty()) return flagValue;
    if (const char* env = std::getenv("WBSDP_CACHE_DIR")) return env;
    return ".";
}

std::string readFile(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

void writeFile(const std::string& path, const std::string& text) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write file: " + path);
    f << text;
}

// Loads the alpha cache when present, otherwise computes and stores it.
IdempotentSet cachedIdempotents(int p, int q, int d, Symmetry sym, const std::string& dir) {
    std::string path = dir + "/" + alphaCacheFileName(p, q, d, sym);
    if (std::ifstream probe(path); probe.good()) return loadAlphaCache(path);
    IdempotentSet set = idempotentsFor(p, q, d, sym);
    saveAlphaCache(set, path);
    return set;
}

// Grid entries may be rationals ("11/20") or decimals ("0.55").
Rat parseGridValue(const std::string& s) {
    auto dot = s.find('.');
    if (dot == std::string::npos) return parseRat(s);
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    std::string den = "1" + std::string(s.size() - dot - 1, '0');
    return ratFromParts(digits, den);
}

std::vector<Rat> parseGrid(const std::string& csv) {
    std::vector<Rat> out;
    std::istringstream is(csv);
    std::string item;
    while (std::getline(is, item, ',')) out.push_back(parseGridValue(item));
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"unitary-equivariant SDP to LP reduction over walled Brauer diagrams"};
    app.require_subcommand(1);

    int p = 1, q = 1, d = 2, seed = 23, maxN = 8, maxD = 10, samples = 200, trials = 20;
    std::string symmetry = "gt", specPath, outPath, format = "lp", which = "gt", cacheDir,
                gridCsv = "0.55,0.6,0.75,0.85,0.9,0.95,1";

    auto* cmdIdem = app.add_subcommand("idempotents", "compute and cache idempotent preimages");
    cmdIdem->add_option("--p", p)->required();
    cmdIdem->add_option("--q", q)->required();
    cmdIdem->add_option("--d", d)->required();
    cmdIdem->add_option("--symmetry", symmetry, "brauer|gt|spq");
    cmdIdem->add_option("--out", cacheDir, "cache directory (default $WBSDP_CACHE_DIR or .)");

    auto* cmdTables = app.add_subcommand("tables", "emit the variable-count tables as CSV");
    cmdTables->add_option("--which", which, "brauer|spq|gt|dim");
    cmdTables->add_option("--max-n", maxN, "largest p+q for the gt/dim tables");
    cmdTables->add_option("--max-d", maxD);
    cmdTables->add_option("--out", outPath);

    auto* cmdConvert = app.add_subcommand("convert", "convert an SDP spec file to an LP");
    cmdConvert->add_option("--spec", specPath)->required();
    cmdConvert->add_option("--out", outPath, "output path (default stdout)");
    cmdConvert->add_option("--format", format, "lp|json");
    cmdConvert->add_option("--cache-dir", cacheDir);

    auto* cmdSolve = app.add_subcommand("solve", "convert and solve exactly");
    cmdSolve->add_option("--spec", specPath)->required();
    cmdSolve->add_option("--cache-dir", cacheDir);

    auto* cmdVerify = app.add_subcommand("verify", "run the oracle verification suites");
    cmdVerify->add_option("--p", p)->required();
    cmdVerify->add_option("--q", q)->required();
    cmdVerify->add_option("--d", d)->required();
    cmdVerify->add_option("--samples", samples, "random (sigma, S) samples for trace lifting");
    cmdVerify->add_option("--trials", trials, "Haar samples for the commutant check");
    cmdVerify->add_option("--seed", seed);

    auto* cmdMajority = app.add_subcommand("majority", "optimal quantum majority-vote fidelity");
    cmdMajority->add_option("--d", d)->required();

    auto* cmdEigmax = app.add_subcommand("eigmax", "principal-eigenvalue decision probability");
    cmdEigmax->add_option("--max-n", maxN, "number of copies n (d = 2, k = 2)")->required();
    cmdEigmax->add_option("--grid", gridCsv, "comma-separated thresholds in [1/2, 1]");

    auto* cmdCloning = app.add_subcommand("cloning", "asymmetric 1->3 cloning SDP emission");
    cmdCloning->add_option("--q", q)->required();
    cmdCloning->add_option("--d", d)->required();
    cmdCloning->add_option("--seed", seed);
    cmdCloning->add_option("--out", outPath, "output base path (.dat-s and .json)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmdIdem->parsed()) {
            Symmetry sym = symmetryFromName(symmetry);
            std::string dir = cacheDirectory(cacheDir);
            IdempotentSet set = cachedIdempotents(p, q, d, sym, dir);
            std::cout << "rows: " << set.size() << "\ncache: " << dir << '/'
                      << alphaCacheFileName(p, q, d, sym) << '\n';
            return kExitOk;
        }

        if (cmdTables->parsed()) {
            std::string csv;
            if (which == "brauer") csv = brauerTableCsv(maxD);
            else if (which == "spq") csv = spqTableCsv(maxD);
            else if (which == "gt") csv = gtTableCsv(maxN, maxD);
            else if (which == "dim") csv = dimensionTableCsv(maxN, maxD);
            else throw std::invalid_argument("unknown table: " + which);
            if (outPath.empty()) std::cout << csv;
            else writeFile(outPath, csv);
            return kExitOk;
        }

        if (cmdConvert->parsed() || cmdSolve->parsed()) {
            SdpSpec spec = parseSpec(readFile(specPath));
            IdempotentSet idem = cachedIdempotents(spec.p, spec.q, spec.d, spec.symmetry,
                                                   cacheDirectory(cacheDir));
            LpProblem lp = convert(spec, idem);
            if (cmdConvert->parsed()) {
                if (format == "lp") {
                    std::string text = emitLp(lp, LpFormat::Text);
                    if (outPath.empty()) std::cout << text;
                    else {
                        writeFile(outPath, text);
                        // Exact sidecar next to the decimal rendering.
                        writeFile(outPath + ".json", emitLp(lp, LpFormat::Json));
                    }
                } else if (format == "json") {
                    std::string text = emitLp(lp, LpFormat::Json);
                    if (outPath.empty()) std::cout << text;
                    else writeFile(outPath, text);
                } else {
                    throw std::invalid_argument("unknown format: " + format);
                }
                return kExitOk;
            }
            SimplexResult res = solveLp(lp);
            std::cout << "status: " << lpStatusName(res.status) << '\n';
            if (res.status == LpStatus::Optimal) {
                std::cout << "optimum: " << ratToString(res.optimum) << '\n';
                for (std::size_t i = 0; i < res.solution.size(); ++i)
                    std::cout << lp.varNames[i] << " = " << ratToString(res.solution[i]) << '\n';
            }
            return kExitOk;
        }

        if (cmdVerify->parsed()) {
            bool ok = true;
            TraceLiftReport tl = verifyTraceLift(samples, p, q, d, static_cast<unsigned>(seed));
            std::cout << "trace lifting: " << (tl.ok() ? "ok" : "MISMATCH") << " (" << tl.samples
                      << " samples)\n";
            for (const auto& msg : tl.mismatches) std::cout << "  " << msg << '\n';
            ok = ok && tl.ok();

            VerifyReport idrep = verifyIdempotentIdentities(p, q, d);
            std::cout << "idempotent identities: " << (idrep.ok() ? "ok" : "MISMATCH") << " ("
                      << idrep.checksRun << " checks)\n";
            for (const auto& msg : idrep.failures) std::cout << "  " << msg << '\n';
            ok = ok && idrep.ok();

            IdempotentSet gt = canonicalIdempotents(p, q, d);
            double worst = 0;
            for (const auto& row : gt.rows)
                worst = std::max(worst, verifyCommutant(row, trials, static_cast<unsigned>(seed)));
            std::cout << "commutant deviation: " << worst << '\n';
            ok = ok && worst < 1e-10;

            return ok ? kExitOk : kExitVerification;
        }

        if (cmdMajority->parsed()) {
            std::cout << ratToString(majorityFidelity(d)) << '\n';
            return kExitOk;
        }

        if (cmdEigmax->parsed()) {
            auto res = eigmax(maxN, parseGrid(gridCsv));
            std::cout << "c,probability,probability_decimal\n";
            for (const auto& [c, prob] : res)
                std::cout << ratToString(c) << ',' << ratToString(prob) << ','
                          << prob.get_d() << '\n';
            return kExitOk;
        }

        if (cmdCloning->parsed()) {
            CloningEmission em = cloning(q, d, static_cast<unsigned>(seed));
            std::cout << "blocks:";
            for (int s : em.blockSizes) std::cout << ' ' << s;
            std::cout << "\ntrace diagonal coefficients:";
            for (std::size_t b = 0; b < em.mValues.size(); ++b)
                for (int i = 0; i < em.blockSizes[b]; ++i)
                    std::cout << ' ' << ratToString(em.mValues[b]);
            std::cout << "\ntrace rhs: " << ratToString(em.traceRhs) << '\n';
            if (!outPath.empty()) {
                writeFile(outPath + ".dat-s", em.sdpaText);
                writeFile(outPath + ".json", em.jsonText);
                std::cout << "wrote " << outPath << ".dat-s and " << outPath << ".json\n";
            }
            return kExitOk;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitVerification;
    }
    return kExitValidation;
}
