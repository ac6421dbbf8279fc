#include <functional>
#include "nefkit/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "nefkit/generators.hpp"
#include "nefkit/hodge.hpp"
#include "nefkit/nefpart.hpp"
#include "nefkit/serialize.hpp"

namespace nefkit {

namespace {

std::string readFile(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Json intVecToJson(const std::vector<Int>& xs) {
    Json arr = Json::array();
    for (const Int& x : xs) arr.push_back(x.str());
    return arr;
}

// flatten a results object into fixed-width "path  value" rows
void renderTable(const Json& j, const std::string& prefix, std::ostream& out) {
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it)
            renderTable(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
    } else {
        std::ostringstream val;
        val << (j.is_string() ? j.get<std::string>() : j.dump());
        out << prefix;
        for (std::size_t i = prefix.size(); i < 32; ++i) out << ' ';
        out << ' ' << val.str() << "\n";
    }
}

struct Emitter {
    std::string format;
    std::string outPath;
    std::ostream* stdoutStream;

    void emit(const std::string& text) const {
        if (outPath.empty()) {
            *stdoutStream << text;
        } else {
            std::ofstream f(outPath, std::ios::binary);
            if (!f) throw InputError("cannot write file: " + outPath);
            f << text;
        }
    }
    void report(const std::string& command, const std::string& inputBytes, const Json& results) const {
        if (format == "json") {
            emit(dumpJson(reportFile(command, inputBytes, results)));
        } else {
            std::ostringstream ss;
            renderTable(results, "", ss);
            emit(ss.str());
        }
    }
};

NefPartition loadPartition(const std::string& bytes) {
    return validate(partitionFromJson(parseJsonText(bytes, "partition file")));
}

LatticePolytope loadPolytope(const std::string& bytes) {
    return polytopeFromJson(parseJsonText(bytes, "polytope file"));
}

Json partitionResults(const NefPartition& np) {
    Json j;
    j["r"] = np.r();
    j["dim"] = np.d();
    Json phi = Json::array();
    for (std::size_t i = 0; i < np.phi.rows; ++i) {
        Json row = Json::array();
        for (std::size_t c = 0; c < np.phi.cols; ++c) row.push_back(np.phi.at(i, c).str());
        phi.push_back(std::move(row));
    }
    j["phi"] = std::move(phi);
    j["deltaVertexCount"] = np.delta.vertices.size();
    j["deltaStarVertexCount"] = np.deltaStar.vertices.size();
    j["valid"] = true;
    return j;
}

Json hodgeReportJson(const HodgeReport& r) {
    Json j;
    j["hOneQ"] = intVecToJson(r.hOneQ);
    j["formulaUsed"] = r.formulaUsed;
    j["preconditionNotes"] = r.preconditionNotes;
    return j;
}

Json decompositionJson(const DecompositionReport& rep) {
    Json comps = Json::array();
    for (const DecompositionComponent& c : rep.components) {
        Json cj;
        cj["indexSubset"] = c.indexSubset;
        cj["dim"] = c.componentPolytope.intrinsicDim;
        Json basis = Json::array();
        for (std::size_t i = 0; i < c.componentLatticeBasis.rows; ++i)
            basis.push_back(vecToJson(c.componentLatticeBasis.row(i)));
        cj["latticeBasis"] = std::move(basis);
        comps.push_back(std::move(cj));
    }
    Json j;
    j["components"] = std::move(comps);
    j["sublatticeIndex"] = rep.sublatticeIndex.str();
    j["splitsOverZ"] = rep.splitsOverZ;
    return j;
}

// the duality identity suites of `verify all`
std::vector<std::pair<std::string, bool>> runVerifySuites(const NefPartition& np) {
    std::vector<std::pair<std::string, bool>> rows;
    auto suite = [&](const std::string& name, auto&& fn) {
        bool ok = false;
        try {
            ok = fn();
        } catch (const std::exception&) {
            ok = false;
        }
        rows.emplace_back(name, ok);
    };

    NefPartition dual = dualPartition(np);
    suite("reflexivity", [&] { return isReflexive(np.delta) && isReflexive(dual.delta); });
    suite("hullIdentities", [&] {
        // dualPartition already asserts them; re-check symmetrically
        std::vector<Vec> pv, nv;
        for (const LatticePolytope& p : np.parts)
            pv.insert(pv.end(), p.vertices.begin(), p.vertices.end());
        for (const LatticePolytope& p : np.nablas)
            nv.insert(nv.end(), p.vertices.begin(), p.vertices.end());
        return hullFromVertices(pv, np.d()) == dual.deltaStar &&
               hullFromVertices(nv, np.d()) == np.deltaStar;
    });
    suite("involution", [&] {
        NefPartition back = dualPartition(dual);
        if (back.r() != np.r()) return false;
        for (int i = 0; i < np.r(); ++i)
            if (!(back.parts[i] == np.parts[i])) return false;
        return true;
    });
    suite("phiColumnSums", [&] {
        for (std::size_t c = 0; c < np.phi.cols; ++c) {
            Int s = 0;
            for (std::size_t r = 0; r < np.phi.rows; ++r) s += np.phi.at(r, c);
            if (s != 1) return false;
        }
        return true;
    });
    suite("latticePointIdentity", [&] {
        Int rhs = 1 - np.r();
        for (const LatticePolytope& nb : np.nablas) rhs += latticePointCount(nb);
        return latticePointCount(np.deltaStar) == rhs;
    });
    suite("ePolynomialMirror", [&] {
        auto a = ePolynomial(np).coefficients;
        auto b = ePolynomial(dual).coefficients;
        auto rev = a;
        std::reverse(rev.begin(), rev.end());
        return a == b && a == rev;
    });
    suite("chiDuality", [&] {
        Int cv = chiOmega1(np).chiOmega1;
        Int cw = chiOmega1(dual).chiOmega1;
        return cv == (((np.d() - np.r()) % 2 == 0) ? cw : -cw);
    });
    suite("interiorCorrespondences", [&] { return interiorCorrespondenceCheck(np).empty(); });
    suite("decomposeOrderIndependence", [&] {
        DecompositionReport a = decompose(np);
        std::vector<LatticePolytope> permuted(np.parts.rbegin(), np.parts.rend());
        DecompositionReport b = decompose(validate(permuted));
        if (a.sublatticeIndex != b.sublatticeIndex ||
            a.components.size() != b.components.size())
            return false;
        auto dims = [](const DecompositionReport& r) {
            std::vector<int> ds;
            for (const auto& c : r.components) ds.push_back(c.componentPolytope.intrinsicDim);
            std::sort(ds.begin(), ds.end());
            return ds;
        };
        return dims(a) == dims(b);
    });
    return rows;
}

std::vector<int> parseDegrees(const std::vector<int>& raw) {
    if (raw.empty()) throw InputError("no degrees given");
    return raw;
}

}  // namespace

int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact-arithmetic toolkit for nef-partitions of reflexive polytopes"};
    app.require_subcommand(1);

    Emitter emitter{"table", "", &out};
    bool strictVertexMode = false;
    app.add_option("--format", emitter.format, "output format")
        ->check(CLI::IsMember({"json", "table"}))
        ->capture_default_str();
    app.add_option("--out", emitter.outPath, "write output to a file instead of stdout");
    app.add_flag("--strict-vertex-mode", strictVertexMode,
                 "count shared dual vertices once per containing nabla");

    // accepted for compatibility; all computations are sequential and
    // results do not depend on it
    if (const char* threads = std::getenv("NEFKIT_THREADS")) (void)threads;

    std::string fileArg, fileArg2;
    int rParts = 2;
    std::vector<int> degrees;

    auto* poly = app.add_subcommand("poly", "polytope inspection");
    auto* polyInfo = poly->add_subcommand("info", "dimensions, counts, reflexivity");
    polyInfo->add_option("file", fileArg)->required();
    auto* polyDual = poly->add_subcommand("dual", "polar dual");
    polyDual->add_option("file", fileArg)->required();
    auto* polyPoints = poly->add_subcommand("points", "lattice points");
    polyPoints->add_option("file", fileArg)->required();

    auto* nef = app.add_subcommand("nef", "nef-partition operations");
    auto* nefValidate = nef->add_subcommand("validate", "validate a partition file");
    nefValidate->add_option("file", fileArg)->required();
    auto* nefDualize = nef->add_subcommand("dualize", "emit the dual partition");
    nefDualize->add_option("file", fileArg)->required();
    auto* nefEnumerate = nef->add_subcommand("enumerate", "all partitions into r parts");
    nefEnumerate->add_option("file", fileArg)->required();
    nefEnumerate->add_option("--r", rParts, "number of parts")->required();
    auto* nefDecompose = nef->add_subcommand("decompose", "irreducible decomposition");
    nefDecompose->add_option("file", fileArg)->required();

    auto* hodge = app.add_subcommand("hodge", "invariant formulas");
    auto* hodgeE = hodge->add_subcommand("e", "E-polynomial");
    hodgeE->add_option("file", fileArg)->required();
    auto* hodgeChi = hodge->add_subcommand("chi", "chi(Omega^1) with term structure");
    hodgeChi->add_option("file", fileArg)->required();
    auto* hodgeH1q = hodge->add_subcommand("h1q", "(1,q) Hodge numbers, ample case");
    hodgeH1q->add_option("file", fileArg)->required();
    auto* hodgeHyp = hodge->add_subcommand("hypersurface", "(p,1) Hodge numbers, r = 1");
    hodgeHyp->add_option("file", fileArg)->required();
    auto* hodgePd = hodge->add_subcommand("pd", "projective-space mirror pair");
    hodgePd->add_option("--degrees", degrees, "hypersurface degrees")->required()->delimiter(',');

    auto* gen = app.add_subcommand("gen", "corpus generators");
    auto* genPd = gen->add_subcommand("pd", "projective-space degree partition");
    genPd->add_option("--degrees", degrees, "hypersurface degrees")->required()->delimiter(',');
    auto* genProduct = gen->add_subcommand("product", "product of two reflexive polytopes");
    genProduct->add_option("file1", fileArg)->required();
    genProduct->add_option("file2", fileArg2)->required();
    auto* genDiamond = gen->add_subcommand("diamond", "the diamond split (negative example)");
    auto* genHalf = gen->add_subcommand("halflattice", "the index-2 direct-sum example");

    auto* verify = app.add_subcommand("verify", "identity suites");
    auto* verifyAll = verify->add_subcommand("all", "run every duality identity suite");
    verifyAll->add_option("file", fileArg)->required();

    // let the global --format/--out/--strict-vertex-mode options appear after
    // any subcommand
    std::function<void(CLI::App*)> enableFallthrough = [&](CLI::App* a) {
        a->fallthrough();
        for (CLI::App* s : a->get_subcommands([](const CLI::App*) { return true; }))
            enableFallthrough(s);
    };
    enableFallthrough(&app);

    try {
        std::vector<const char*> argv{"nefkit"};
        for (const std::string& a : args) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());

        std::string command = "nefkit";
        for (const std::string& a : args) command += " " + a;

        if (*polyInfo) {
            std::string bytes = readFile(fileArg);
            LatticePolytope p = loadPolytope(bytes);
            PointEnumeration pe = enumerateLatticePoints(p);
            Json j;
            j["ambientDim"] = p.ambientDim;
            j["intrinsicDim"] = p.intrinsicDim;
            j["vertexCount"] = p.vertices.size();
            j["facetCount"] = p.facets.size();
            j["reflexive"] = isReflexive(p);
            j["latticePoints"] = pe.all.size();
            j["interiorLatticePoints"] = pe.interior.size();
            emitter.report(command, bytes, j);
        } else if (*polyDual) {
            std::string bytes = readFile(fileArg);
            LatticePolytope p = loadPolytope(bytes);
            PolarDual dual = polarDual(p);
            if (dual.latticeFlag) {
                emitter.emit(dumpJson(polytopeToJson(polarDualLattice(p))));
            } else {
                Json verts = Json::array();
                for (const RatVec& v : dual.vertices) {
                    Json row = Json::array();
                    for (const Rational& c : v) {
                        std::ostringstream os;
                        os << c;
                        row.push_back(os.str());
                    }
                    verts.push_back(std::move(row));
                }
                Json j;
                j["lattice"] = false;
                j["vertices"] = std::move(verts);
                emitter.report(command, bytes, j);
            }
        } else if (*polyPoints) {
            std::string bytes = readFile(fileArg);
            PointEnumeration pe = enumerateLatticePoints(loadPolytope(bytes));
            Json j;
            Json all = Json::array(), interior = Json::array();
            for (const Vec& v : pe.all) all.push_back(vecToJson(v));
            for (const Vec& v : pe.interior) interior.push_back(vecToJson(v));
            j["points"] = std::move(all);
            j["interiorPoints"] = std::move(interior);
            emitter.report(command, bytes, j);
        } else if (*nefValidate) {
            std::string bytes = readFile(fileArg);
            emitter.report(command, bytes, partitionResults(loadPartition(bytes)));
        } else if (*nefDualize) {
            std::string bytes = readFile(fileArg);
            emitter.emit(dumpJson(partitionToJson(dualPartition(loadPartition(bytes)).parts)));
        } else if (*nefEnumerate) {
            std::string bytes = readFile(fileArg);
            std::vector<NefPartition> found =
                enumeratePartitions(loadPolytope(bytes), rParts);
            Json arr = Json::array();
            for (const NefPartition& np : found) arr.push_back(partitionToJson(np.parts));
            Json j;
            j["count"] = found.size();
            j["partitions"] = std::move(arr);
            emitter.report(command, bytes, j);
        } else if (*nefDecompose) {
            std::string bytes = readFile(fileArg);
            emitter.report(command, bytes, decompositionJson(decompose(loadPartition(bytes))));
        } else if (*hodgeE) {
            std::string bytes = readFile(fileArg);
            Json j;
            j["coefficients"] = intVecToJson(ePolynomial(loadPartition(bytes)).coefficients);
            emitter.report(command, bytes, j);
        } else if (*hodgeChi) {
            std::string bytes = readFile(fileArg);
            ChiReport rep = chiOmega1(loadPartition(bytes), strictVertexMode);
            Json j;
            j["chiOmega1"] = rep.chiOmega1.str();
            j["termChiOd"] = rep.termChiOd.str();
            j["termDeltaSums"] = rep.termDeltaSums.str();
            j["termVertexNotInJ"] = rep.termVertexNotInJ.str();
            j["termVertexInJ"] = rep.termVertexInJ.str();
            j["vertexAssignmentMode"] = rep.vertexAssignmentMode;
            emitter.report(command, bytes, j);
        } else if (*hodgeH1q) {
            std::string bytes = readFile(fileArg);
            emitter.report(command, bytes, hodgeReportJson(hodgeOneAmple(loadPartition(bytes))));
        } else if (*hodgeHyp) {
            std::string bytes = readFile(fileArg);
            emitter.report(command, bytes,
                           hodgeReportJson(hodgeOneHypersurface(loadPolytope(bytes))));
        } else if (*hodgePd) {
            auto [vRep, wRep] = pdMirrorHodge(parseDegrees(degrees));
            Json j;
            j["degrees"] = degrees;
            j["v"] = hodgeReportJson(vRep);
            j["w"] = hodgeReportJson(wRep);
            std::string degreeBytes;
            for (int di : degrees) degreeBytes += std::to_string(di) + ",";
            emitter.report(command, degreeBytes, j);
        } else if (*genPd) {
            // canonical part order, so dualize round trips byte-identically
            emitter.emit(
                dumpJson(partitionToJson(validate(genPdParts(parseDegrees(degrees))).parts)));
        } else if (*genProduct) {
            LatticePolytope a = loadPolytope(readFile(fileArg));
            LatticePolytope b = loadPolytope(readFile(fileArg2));
            emitter.emit(dumpJson(partitionToJson(validate(genProductParts({a, b})).parts)));
        } else if (*genDiamond) {
            emitter.emit(dumpJson(partitionToJson(genDiamondSplitParts())));
        } else if (*genHalf) {
            emitter.emit(dumpJson(partitionToJson(validate(genHalfLatticeParts()).parts)));
        } else if (*verifyAll) {
            std::string bytes = readFile(fileArg);
            NefPartition np = loadPartition(bytes);
            auto rows = runVerifySuites(np);
            bool allPass = true;
            Json j;
            for (const auto& [name, ok] : rows) {
                j[name] = ok ? "PASS" : "FAIL";
                if (!ok) allPass = false;
            }
            emitter.report(command, bytes, j);
            if (!allPass) return 3;
        }
        return 0;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << "input error: " << e.what() << "\n";
        return 1;
    } catch (const InputError& e) {
        err << "input error: " << e.what() << "\n";
        return 1;
    } catch (const PreconditionError& e) {
        err << "precondition failed: " << e.what() << "\n";
        return 2;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace nefkit
