use crate::algebra::rational::binomial;
use crate::algebra::{vars, Grading, MultiPoly, Rat, TruncatedSeries};
use crate::hilb::TautologicalClass;

/// The `h^k` coefficient of
///
/// ```text
/// c(T S^[n]) (1+h)^chi  sum_i h^i c_{n-i}(L^[n])  /  sum_i (1+h)^i c_{n-i}(L^[n])
/// ```
///
/// as a tautological class on `S^[n]`. Only its degree-`2n` part is seen
/// by the integral.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BracketIntegrand {
    pub n: u32,
    pub chi_l: i64,
    pub k: u32,
    pub class: TautologicalClass,
}

pub fn build_integrand(n: u32, chi_l: i64, k: u32) -> BracketIntegrand {
    let chern_ring = TautologicalClass::ring(n);
    let mut names: Vec<String> = vec!["h".to_string()];
    names.extend(chern_ring.iter().cloned());
    let ring = vars(&names);

    let mut h_weights = vec![0; ring.len()];
    h_weights[0] = 1;
    let mut chern_weights = vec![0];
    chern_weights.extend(TautologicalClass::weights(n));
    let gradings = vec![Grading::new(h_weights, k + 1), Grading::new(chern_weights, 2 * n + 1)];

    let series = |p: MultiPoly| TruncatedSeries::new(p, gradings.clone());
    let one = MultiPoly::one(ring.clone());
    let h = MultiPoly::var(ring.clone(), "h").unwrap();
    let taut = |i: u32| -> MultiPoly {
        if i == 0 {
            one.clone()
        } else {
            MultiPoly::var(ring.clone(), &format!("cL{i}")).unwrap()
        }
    };

    let mut total_tangent = one.clone();
    for j in 1..=2 * n {
        total_tangent = &total_tangent + &MultiPoly::var(ring.clone(), &format!("cT{j}")).unwrap();
    }

    // (1+h)^chi, with chi possibly negative.
    let mut binom = MultiPoly::zero(ring.clone());
    for j in 0..=k {
        binom = &binom + &h.pow(j).scale(&binomial(chi_l, j));
    }

    let one_plus_h = &one + &h;
    let mut numer = MultiPoly::zero(ring.clone());
    let mut denom = MultiPoly::zero(ring.clone());
    for i in 0..=n {
        numer = &numer + &(&h.pow(i) * &taut(n - i));
        denom = &denom + &(&one_plus_h.pow(i) * &taut(n - i));
    }

    let inv = series(denom)
        .invert()
        .expect("denominator has constant term 1 and every other term is graded");
    let product = series(total_tangent).mul(&series(binom)).mul(&series(numer)).mul(&inv);
    let coeff = product
        .into_base()
        .coefficient_of("h", k)
        .expect("h is in the ring");
    let class = TautologicalClass::from_poly(n, coeff).expect("remaining ring is the Chern ring");
    BracketIntegrand { n, chi_l, k, class }
}

impl BracketIntegrand {
    /// Constant part, i.e. the whole integrand when `n = 0`.
    pub fn constant(&self) -> Rat {
        self.class.poly().constant_term()
    }

    pub fn is_one(&self) -> bool {
        self.class.poly() == &MultiPoly::one(self.class.poly().vars().clone())
    }
}
