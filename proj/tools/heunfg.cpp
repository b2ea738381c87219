#include <CLI11.hpp>
#include <complex>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "heunfg/appendix.hpp"
#include "heunfg/json_io.hpp"

namespace {

using heunfg::AField;
using heunfg::Characteristics;
using heunfg::MultiPoly;
using heunfg::Rational;
using json = nlohmann::json;
using cplx = std::complex<double>;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Characteristics parse_m(const std::string& s) {
    std::array<int, 4> v{};
    std::stringstream ss(s);
    std::string tok;
    size_t i = 0;
    while (std::getline(ss, tok, ',')) {
        if (i >= 4) throw UsageError("-m expects four comma-separated integers");
        try {
            size_t pos = 0;
            v[i] = std::stoi(tok, &pos);
            if (pos != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw UsageError("-m expects four comma-separated integers");
        }
        ++i;
    }
    if (i != 4) throw UsageError("-m expects four comma-separated integers");
    return {v[0], v[1], v[2], v[3]};
}

std::optional<Rational> parse_modulus(const std::string& s) {
    if (s == "symbolic") return std::nullopt;
    try {
        return Rational::parse(s);
    } catch (const std::exception&) {
        throw UsageError("--a expects `symbolic` or a rational p/q");
    }
}

bool looks_exact(const std::string& s) {
    return s.find_first_not_of("0123456789-/") == std::string::npos;
}

Rational parse_exact_lambda(const std::string& s) {
    if (!looks_exact(s)) throw UsageError("--lambda must be an exact rational in symbolic mode");
    try {
        return Rational::parse(s);
    } catch (const std::exception&) {
        throw UsageError("--lambda: malformed rational");
    }
}

cplx parse_complex(const std::string& s, const char* flag) {
    std::stringstream ss(s);
    std::string re, im;
    std::getline(ss, re, ',');
    std::getline(ss, im, ',');
    try {
        size_t pos = 0;
        double r = std::stod(re, &pos);
        if (pos != re.size()) throw std::invalid_argument(re);
        double i = 0.0;
        if (!im.empty()) {
            i = std::stod(im, &pos);
            if (pos != im.size()) throw std::invalid_argument(im);
        }
        return {r, i};
    } catch (const std::exception&) {
        throw UsageError(std::string(flag) + " expects re[,im] as floats");
    }
}

struct Output {
    bool json_mode = false;
    std::string path;
    std::ostringstream buf;

    int flush() {
        if (path.empty()) {
            std::cout << buf.str();
            return 0;
        }
        std::ofstream f(path);
        if (!f) {
            std::cerr << "cannot open output file: " << path << "\n";
            return 2;
        }
        f << buf.str();
        return 0;
    }
};

void add_common(CLI::App* cmd, std::string& m_arg, std::string& a_arg, Output& out) {
    cmd->add_option("-m,--characteristics", m_arg, "characteristics m0,m1,m2,m3")->required();
    cmd->add_option("--a", a_arg, "modulus: `symbolic` or rational p/q")->default_val("symbolic");
    cmd->add_flag("--json", out.json_mode, "emit JSON instead of text");
    cmd->add_option("-o,--output", out.path, "write the result to a file");
}

std::string complex_str(const cplx& z) {
    std::ostringstream s;
    s.precision(15);
    s << z.real();
    if (z.imag() != 0.0) s << (z.imag() > 0 ? " + " : " - ") << std::abs(z.imag()) << "i";
    return s.str();
}

int run_psi(const std::string& m_arg, const std::string& a_arg, Output& out) {
    auto psi = heunfg::build_psi(parse_m(m_arg), parse_modulus(a_arg));
    if (out.json_mode)
        out.buf << heunfg::to_json(psi).dump(2) << "\n";
    else
        out.buf << "Ψ = " << psi.psi.str() << "\n";
    return out.flush();
}

int run_genus(const std::string& m_arg, const std::string& a_arg, Output& out) {
    (void)a_arg;
    Characteristics m = parse_m(m_arg);
    int g = heunfg::genus(m);
    if (out.json_mode)
        out.buf << json{{"characteristics", heunfg::to_json(m)}, {"genus", g}}.dump(2) << "\n";
    else
        out.buf << "g = " << g << "\n";
    return out.flush();
}

int run_curve(const std::string& m_arg, const std::string& a_arg, Output& out) {
    auto psi = heunfg::build_psi(parse_m(m_arg), parse_modulus(a_arg));
    auto curve = heunfg::nu_squared(psi);
    if (psi.a) heunfg::branch_points(curve, *psi.a);
    if (out.json_mode) {
        out.buf << heunfg::to_json(curve).dump(2) << "\n";
    } else {
        out.buf << "g = " << curve.g << "\n";
        out.buf << "ν² = " << curve.nu2.str() << "\n";
        if (psi.a)
            for (const auto& z : curve.cache.at(*psi.a))
                out.buf << "branch point: " << complex_str(z) << "\n";
    }
    return out.flush();
}

int run_nk(const std::string& m_arg, const std::string& a_arg, Output& out) {
    (void)a_arg;
    Characteristics m = parse_m(m_arg);
    auto classes = heunfg::enumerate_nk(m);
    if (out.json_mode) {
        json arr = json::array();
        for (const auto& c : classes) arr.push_back(heunfg::to_json(c));
        out.buf << arr.dump(2) << "\n";
    } else {
        int total = 0;
        for (const auto& c : classes) {
            out.buf << "class " << c.reduced.str() << ": n = " << c.count
                    << ", deg F = " << c.deg_f << "\n";
            total += c.count;
        }
        out.buf << "total = " << total << " = 2g+1 (g = " << heunfg::genus(m) << ")\n";
    }
    return out.flush();
}

int run_branch(const std::string& m_arg, const std::string& a_arg, const std::string& lambda_arg,
               Output& out) {
    auto a = parse_modulus(a_arg);
    auto psi = heunfg::build_psi(parse_m(m_arg), a);
    heunfg::BranchPointRecord rec;
    if (!a || looks_exact(lambda_arg)) {
        rec = heunfg::branch_factorize(psi, AField(parse_exact_lambda(lambda_arg)));
    } else {
        rec = heunfg::branch_factorize(psi, parse_complex(lambda_arg, "--lambda"));
    }
    if (out.json_mode) {
        out.buf << heunfg::to_json(rec).dump(2) << "\n";
    } else {
        out.buf << "lambda = "
                << (rec.lambda_exact ? rec.lambda_exact->str() : complex_str(rec.lambda)) << "\n";
        out.buf << "multiplicities (M0,M1,M2,M3) = (" << rec.M[0] << "," << rec.M[1] << ","
                << rec.M[2] << "," << rec.M[3] << ")\n";
        out.buf << "reduced characteristics = " << rec.reduced.str() << "\n";
        out.buf << "deg F = " << rec.deg_f << "\n";
        if (!rec.f_monic.empty()) {
            out.buf << "F (monic, ascending):";
            for (const auto& c : rec.f_monic) out.buf << " " << c.str();
            out.buf << "\n";
            out.buf << "scale = " << rec.scale.str() << "\n";
        } else {
            out.buf << "F (monic, ascending):";
            for (const auto& c : rec.f_numeric) out.buf << " " << complex_str(c);
            out.buf << "\n";
        }
        out.buf << "shifted lambda = "
                << (rec.lambda_tilde_exact ? rec.lambda_tilde_exact->str()
                                           : complex_str(rec.lambda_tilde))
                << "\n";
    }
    return out.flush();
}

int run_heunpoly(const std::string& m_arg, const std::string& a_arg, int degree, Output& out) {
    auto a = parse_modulus(a_arg);
    auto sys = heunfg::heun_polynomial_eigenvalues(parse_m(m_arg), degree, a);
    if (out.json_mode) {
        out.buf << heunfg::to_json(sys).dump(2) << "\n";
    } else {
        out.buf << "reduced characteristics = " << sys.reduced.str() << ", degree = "
                << sys.degree << "\n";
        for (const auto& v : sys.values) {
            out.buf << "lambda = "
                    << (v.lambda_exact ? v.lambda_exact->str() : complex_str(v.lambda));
            if (!v.f.empty()) {
                out.buf << "  F:";
                for (const auto& c : v.f) out.buf << " " << complex_str(c);
            }
            out.buf << "\n";
        }
    }
    return out.flush();
}

int run_flows(const std::string& m_arg, const std::string& a_arg, Output& out) {
    auto a = parse_modulus(a_arg);
    AField av = a ? AField(*a) : AField::var();
    auto nd = heunfg::novikov_order(parse_m(m_arg), av);
    if (out.json_mode) {
        out.buf << heunfg::to_json(nd).dump(2) << "\n";
    } else {
        out.buf << "order = " << nd.order << "\n";
        for (size_t i = 0; i < nd.constants.size(); ++i)
            out.buf << "c" << (i + 1) << " = " << nd.constants[i].str() << "\n";
        out.buf << "d = " << nd.affine_constant.str() << "\n";
    }
    return out.flush();
}

int run_eval(const std::string& m_arg, const std::string& a_arg, const std::string& lambda_arg,
             const std::string& z_arg, bool degenerate, double tol, Output& out) {
    auto a = parse_modulus(a_arg);
    if (!a) throw UsageError("eval requires a rational modulus");
    auto psi = heunfg::build_psi(parse_m(m_arg), a);
    auto curve = heunfg::nu_squared(psi);
    cplx lambda = looks_exact(lambda_arg) ? cplx(parse_exact_lambda(lambda_arg).to_double(), 0.0)
                                          : parse_complex(lambda_arg, "--lambda");
    cplx z = parse_complex(z_arg, "--z");
    heunfg::SolutionEvaluator ev(psi, curve, lambda, tol);
    auto v = degenerate ? ev.degenerate(z) : ev(z);
    if (out.json_mode) {
        out.buf << heunfg::to_json(v).dump(2) << "\n";
    } else {
        out.buf << "Y1 = " << complex_str(v.y1) << "\n";
        out.buf << "Y2 = " << complex_str(v.y2) << "\n";
    }
    return out.flush();
}

int run_monodromy(const std::string& m_arg, const std::string& a_arg,
                  const std::string& lambda_arg, Output& out) {
    auto a = parse_modulus(a_arg);
    if (!a) throw UsageError("monodromy requires a rational modulus");
    auto psi = heunfg::build_psi(parse_m(m_arg), a);
    auto curve = heunfg::nu_squared(psi);
    cplx lambda = looks_exact(lambda_arg) ? cplx(parse_exact_lambda(lambda_arg).to_double(), 0.0)
                                          : parse_complex(lambda_arg, "--lambda");
    if (lambda.imag() != 0.0) throw UsageError("monodromy requires a real lambda");
    auto md = heunfg::monodromy_generators(psi, curve, lambda.real());
    if (out.json_mode) {
        out.buf << heunfg::to_json(md).dump(2) << "\n";
    } else {
        out.buf.precision(15);
        out.buf << "phi = " << md.phi << "\n";
        out.buf << "psi = " << md.psi_angle << "\n";
        auto pm = [&](const char* name, const heunfg::Mat2& M) {
            out.buf << name << " = [[" << M[0][0] << ", " << M[0][1] << "], [" << M[1][0] << ", "
                    << M[1][1] << "]]\n";
        };
        pm("M0", md.M0);
        pm("M1", md.M1);
        pm("M2", md.M2);
    }
    return out.flush();
}

int run_verify_appendix(Output& out) {
    const auto& corpus = heunfg::fixture_corpus();
    int matched = 0;
    std::ostringstream diag;
    json arr = json::array();
    for (const auto& fc : corpus) {
        auto psi = heunfg::build_psi(fc.m, std::nullopt);
        auto curve = heunfg::nu_squared(psi);
        bool ok = psi.psi == fc.psi && curve.nu2 == fc.nu2;
        if (ok) {
            ++matched;
            out.buf << fc.m.str() << ": exact match\n";
        } else {
            diag << fc.m.str() << ": MISMATCH\n";
            if (!(psi.psi == fc.psi))
                diag << "  psi built: " << psi.psi.str() << "\n  psi fixture: " << fc.psi.str()
                     << "\n";
            if (!(curve.nu2 == fc.nu2))
                diag << "  nu2 built: " << curve.nu2.str() << "\n  nu2 fixture: " << fc.nu2.str()
                     << "\n";
        }
        if (out.json_mode)
            arr.push_back(json{{"characteristics", heunfg::to_json(fc.m)}, {"match", ok}});
    }
    size_t total = corpus.size();
    if (matched != static_cast<int>(total)) {
        std::cerr << diag.str() << matched << "/" << total << " exact matches\n";
        return 1;
    }
    if (out.json_mode) {
        out.buf.str("");
        out.buf << json{{"cases", arr}, {"matched", matched}, {"total", total}}.dump(2) << "\n";
    } else {
        out.buf << matched << "/" << total << " exact matches\n";
    }
    return out.flush();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-gap solutions of Heun's equation with integer characteristics"};
    app.require_subcommand(1);

    std::string m_arg, a_arg = "symbolic", lambda_arg, z_arg;
    int degree = 0;
    bool degenerate = false;
    double tol = 1e-13;
    Output out;

    auto* c_psi = app.add_subcommand("psi", "build the generating polynomial Ψ(λ, z)");
    add_common(c_psi, m_arg, a_arg, out);

    auto* c_genus = app.add_subcommand("genus", "genus of the spectral curve");
    add_common(c_genus, m_arg, a_arg, out);

    auto* c_curve = app.add_subcommand("curve", "spectral curve ν²(λ) and branch points");
    add_common(c_curve, m_arg, a_arg, out);

    auto* c_nk = app.add_subcommand("nk", "branch-point counts by sign class");
    add_common(c_nk, m_arg, a_arg, out);

    auto* c_branch = app.add_subcommand("branch", "factor Ψ at a branch point");
    add_common(c_branch, m_arg, a_arg, out);
    c_branch->add_option("--lambda", lambda_arg, "accessory value (rational, or re[,im])")
        ->required();

    auto* c_heunpoly = app.add_subcommand("heunpoly", "polynomial eigenvalues of the reduced equation");
    add_common(c_heunpoly, m_arg, a_arg, out);
    c_heunpoly->add_option("-d,--degree", degree, "polynomial degree")->required();

    auto* c_flows = app.add_subcommand("flows", "minimal affine dependence of the flow hierarchy");
    add_common(c_flows, m_arg, a_arg, out);

    auto* c_eval = app.add_subcommand("eval", "evaluate the solution pair Y1, Y2");
    add_common(c_eval, m_arg, a_arg, out);
    c_eval->add_option("--lambda", lambda_arg, "accessory value (rational, or re[,im])")->required();
    c_eval->add_option("--z", z_arg, "evaluation point re[,im]")->required();
    c_eval->add_flag("--degenerate", degenerate, "branch-point pair Y1, Y2 = Y1 * integral");
    c_eval->add_option("--tol", tol, "quadrature tolerance")->check(CLI::PositiveNumber);

    auto* c_mono = app.add_subcommand("monodromy", "monodromy generators M0, M1, M2");
    add_common(c_mono, m_arg, a_arg, out);
    c_mono->add_option("--lambda", lambda_arg, "real accessory value")->required();

    auto* c_verify = app.add_subcommand("verify-appendix",
                                        "rebuild the embedded example corpus and diff");
    c_verify->add_flag("--json", out.json_mode, "emit JSON instead of text");
    c_verify->add_option("-o,--output", out.path, "write the result to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n" << app.help();
        return 2;
    }

    try {
        if (c_psi->parsed()) return run_psi(m_arg, a_arg, out);
        if (c_genus->parsed()) return run_genus(m_arg, a_arg, out);
        if (c_curve->parsed()) return run_curve(m_arg, a_arg, out);
        if (c_nk->parsed()) return run_nk(m_arg, a_arg, out);
        if (c_branch->parsed()) return run_branch(m_arg, a_arg, lambda_arg, out);
        if (c_heunpoly->parsed()) return run_heunpoly(m_arg, a_arg, degree, out);
        if (c_flows->parsed()) return run_flows(m_arg, a_arg, out);
        if (c_eval->parsed()) return run_eval(m_arg, a_arg, lambda_arg, z_arg, degenerate, tol, out);
        if (c_mono->parsed()) return run_monodromy(m_arg, a_arg, lambda_arg, out);
        if (c_verify->parsed()) return run_verify_appendix(out);
    } catch (const UsageError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const heunfg::InvalidModulus& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const heunfg::NegativeCharacteristic& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    return 2;
}
