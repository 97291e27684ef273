// Small tour: q-Zeta polynomial, flag vectors, HH numerator and volume of one poset.
// Usage: qzeta_demo [poset.json]   (defaults to the boolean lattice B_3)

#include <qzeta/qzeta_all.hpp>

#include <iostream>

using namespace qzeta;

int main(int argc, char** argv) {
    try {
        Poset p = boolean(3);
        std::optional<HeightFunction> h;
        if (argc > 1) {
            auto doc = read_poset_file(argv[1]);
            for (const auto& w : doc.warnings) std::cerr << "warning: " << w << "\n";
            p = std::move(doc.poset);
            h = doc.height;
        }
        if (!h) h = is_graded(p) ? HeightFunction(rank_function(p)) : height_from_linear_extension(p);

        const auto z = qzeta_poly(p, *h);
        std::cout << "elements: " << p.size() << ", H = " << h->max() << "\n";
        std::cout << "Z(x) = " << z.poly.to_string() << "\n";
        for (int n = -1; n <= 3; ++n) std::cout << "Z([" << n << "]_q) = " << polyx_eval(z.poly, qint(n)).to_string() << "\n";

        const auto hh = hh_numerator(p, *h);
        std::cout << "HH numerator:";
        for (const auto& c : hh.t_coefficients) std::cout << " [" << c.to_string() << "]";
        std::cout << " over prod_{l=0.." << hh.denominator_degree << "} (1 - q^l t)\n";
        std::cout << "volume = " << qzeta_volume(p, *h).to_string() << "\n";

        if (is_bounded(p) && is_graded(p)) {
            const auto f = flag_vectors(p);
            std::cout << "flag vectors (S: alpha beta)\n";
            for (RankSet s : rank_subsets(f.H)) std::cout << "  {" << rank_set_key(s) << "}: " << f.a(s).str() << " " << f.b(s).str() << "\n";
            std::cout << "characteristic polynomial: " << format_spaced(characteristic_polynomial(p), "y") << "\n";
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
