use crate::error::{Error, Result};
use crate::fock::{OperatorKind, OperatorSymbol};
use crate::halfspin::gamma::{big_theta, slash};
use crate::halfspin::identities::{dirac_projection, slash_eigen_residual};
use crate::halfspin::{build_spinor_basis, charge_conjugation_op, FourMomentum, Frequency, Helicity, PhaseConvention};
use crate::linalg::{ApproxCompare, CMatrix, CVector};
use crate::scalar::{i_unit, Real, C};

/// One `spinor · operator · e^{∓ip·x}` term at a fixed momentum.
#[derive(Debug, Clone, PartialEq)]
pub struct Term<T: Real> {
    pub spinor: CVector<T>,
    pub symbol: OperatorSymbol,
    pub frequency: Frequency,
}

/// Sum of terms with at most one entry per `(symbol, frequency)`.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct ModeExpansion<T: Real> {
    terms: Vec<Term<T>>,
}

impl<T: Real> ModeExpansion<T> {
    pub fn new(terms: Vec<Term<T>>) -> Result<Self> {
        for (k, t) in terms.iter().enumerate() {
            if t.spinor.len() != 4 {
                return Err(Error::DimensionMismatch {
                    op: "ModeExpansion::new",
                    expected: "4".into(),
                    found: t.spinor.len().to_string(),
                });
            }
            if terms[..k].iter().any(|u| u.symbol == t.symbol && u.frequency == t.frequency) {
                return Err(Error::InvalidConfig(format!("duplicate term {}", t.symbol)));
            }
        }
        let mut out = Self { terms };
        out.sort();
        Ok(out)
    }

    pub fn zero() -> Self {
        Self { terms: Vec::new() }
    }

    fn sort(&mut self) {
        self.terms.sort_by_key(|t| (t.symbol, t.frequency as u8));
    }

    pub fn terms(&self) -> &[Term<T>] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, symbol: OperatorSymbol, frequency: Frequency) -> Option<&CVector<T>> {
        self.terms.iter().find(|t| t.symbol == symbol && t.frequency == frequency).map(|t| &t.spinor)
    }

    /// `α self + β other`, merging matching terms.
    pub fn combine(&self, alpha: C<T>, other: &Self, beta: C<T>) -> Self {
        let mut terms: Vec<Term<T>> =
            self.terms.iter().map(|t| Term { spinor: t.spinor.scale(alpha), ..t.clone() }).collect();
        for t in &other.terms {
            let add = t.spinor.scale(beta);
            match terms.iter_mut().find(|u| u.symbol == t.symbol && u.frequency == t.frequency) {
                Some(u) => u.spinor = &u.spinor + &add,
                None => terms.push(Term { spinor: add, ..t.clone() }),
            }
        }
        let mut out = Self { terms };
        out.sort();
        out
    }

    /// Largest coefficient difference, treating missing terms as zero.
    pub fn max_abs_diff(&self, other: &Self) -> T {
        let one = C::new(T::one(), T::zero());
        let d = self.combine(one, other, -one);
        d.terms.iter().map(|t| t.spinor.max_abs()).fold(T::zero(), T::max)
    }
}

fn a_symbol(dagger: bool, h: Helicity) -> OperatorSymbol {
    OperatorSymbol::new(OperatorKind::A, dagger, h)
}

/// `ν = Σ_η [λ^S_η a_η e^{-ip·x} + λ^A_η a†_η e^{+ip·x}]` at one momentum,
/// with `b† ≡ a†`.
pub fn majorana_mode<T: Real>(p: &FourMomentum<T>, conv: &PhaseConvention<T>) -> Result<ModeExpansion<T>> {
    let b = build_spinor_basis(p, conv)?;
    let mut terms = Vec::new();
    for h in Helicity::ALL {
        terms.push(Term {
            spinor: b.lambda_s[h.index()].clone(),
            symbol: a_symbol(false, h),
            frequency: Frequency::Positive,
        });
        terms.push(Term {
            spinor: b.lambda_a[h.index()].clone(),
            symbol: a_symbol(true, h),
            frequency: Frequency::Negative,
        });
    }
    ModeExpansion::new(terms)
}

/// `𝒞x†`: conjugation matrix on each coefficient's conjugate, dagger on
/// each symbol and flipped frequency.
pub fn charge_conjugate_expansion<T: Real>(
    x: &ModeExpansion<T>,
    conv: &PhaseConvention<T>,
) -> Result<ModeExpansion<T>> {
    let sc = charge_conjugation_op(conv);
    let terms = x
        .terms()
        .iter()
        .map(|t| {
            Ok(Term { spinor: sc.apply(&t.spinor)?, symbol: t.symbol.adjoint(), frequency: t.frequency.flipped() })
        })
        .collect::<Result<Vec<_>>>()?;
    ModeExpansion::new(terms)
}

#[derive(Debug, Clone)]
pub struct ZiinoBarutSplit<T: Real> {
    /// `(ν + 𝒞ν†)/2`
    pub even: ModeExpansion<T>,
    /// `(ν - 𝒞ν†)/2`
    pub odd: ModeExpansion<T>,
}

pub fn ziino_barut_split<T: Real>(p: &FourMomentum<T>, conv: &PhaseConvention<T>) -> Result<ZiinoBarutSplit<T>> {
    let nu = majorana_mode(p, conv)?;
    let cnu = charge_conjugate_expansion(&nu, conv)?;
    let half = C::new(T::lit(0.5), T::zero());
    Ok(ZiinoBarutSplit { even: nu.combine(half, &cnu, half), odd: nu.combine(half, &cnu, -half) })
}

#[derive(Debug, Clone, Copy)]
pub struct SplitCheck<T> {
    /// `|even + odd - ν|`
    pub reconstruction: T,
    /// Distance of the four coefficient slots from the chiral closed forms
    /// `(iΘφ_L*, 0)`, `(0, φ_L)`, `(0, φ_L)`, `(-iΘφ_L*, 0)`.
    pub displayed: T,
    /// `|𝒞even† - even|`
    pub even_eigen: T,
    /// `|𝒞odd† + odd|`
    pub odd_eigen: T,
}

impl<T: Real> SplitCheck<T> {
    pub fn max_residual(&self) -> T {
        self.reconstruction.max(self.displayed).max(self.even_eigen).max(self.odd_eigen)
    }
}

pub fn ziino_barut_check<T: Real>(p: &FourMomentum<T>, conv: &PhaseConvention<T>) -> Result<SplitCheck<T>> {
    let nu = majorana_mode(p, conv)?;
    let split = ziino_barut_split(p, conv)?;
    let b = build_spinor_basis(p, conv)?;
    let one = C::new(T::one(), T::zero());
    let z2 = CVector::<T>::zeros(2);
    let it = big_theta::<T>().scale(i_unit());
    let missing = || Error::InvalidConfig("split lost a term".into());
    let mut displayed = T::zero();
    for h in Helicity::ALL {
        let phi = &b.phi_l[h.index()];
        let upper = it.mul_vec(&phi.conj());
        let slots = [
            (&split.even, false, CVector::concat(&upper, &z2)),
            (&split.even, true, CVector::concat(&z2, phi)),
            (&split.odd, false, CVector::concat(&z2, phi)),
            (&split.odd, true, CVector::concat(&-&upper, &z2)),
        ];
        for (half, dagger, expect) in slots {
            let freq = if dagger { Frequency::Negative } else { Frequency::Positive };
            let got = half.coefficient(a_symbol(dagger, h), freq).ok_or_else(missing)?;
            displayed = displayed.max(got.max_abs_diff(&expect)?);
        }
    }
    let even_c = charge_conjugate_expansion(&split.even, conv)?;
    let odd_c = charge_conjugate_expansion(&split.odd, conv)?;
    Ok(SplitCheck {
        reconstruction: split.even.combine(one, &split.odd, one).max_abs_diff(&nu),
        displayed,
        even_eigen: even_c.max_abs_diff(&split.even),
        odd_eigen: odd_c.combine(one, &split.odd, one).max_abs_diff(&ModeExpansion::zero()),
    })
}

#[derive(Debug, Clone)]
pub struct DiracFromMajorana<T: Real> {
    /// `(1 + p̸/m)` images of the positive-frequency coefficients, then
    /// `(1 - p̸/m)` images of the negative-frequency ones.
    pub positive_images: Vec<CVector<T>>,
    pub negative_images: Vec<CVector<T>>,
    /// `max |image - (λ ± ρ partner)|∞`
    pub partner_residual: T,
    /// `max |p̸ image ∓ m image|∞`
    pub eigenspace_residual: T,
    pub positive_rank: usize,
    pub negative_rank: usize,
}

/// Applies the Dirac projections to the mode coefficients of `ν`.
/// Positive images equal `λ^S + ρ^A`, negative images `λ^A - ρ^S`.
pub fn dirac_from_majorana<T: Real>(
    p: &FourMomentum<T>,
    conv: &PhaseConvention<T>,
    tol: T,
) -> Result<DiracFromMajorana<T>> {
    let nu = majorana_mode(p, conv)?;
    let b = build_spinor_basis(p, conv)?;
    let mut out = DiracFromMajorana {
        positive_images: Vec::new(),
        negative_images: Vec::new(),
        partner_residual: T::zero(),
        eigenspace_residual: T::zero(),
        positive_rank: 0,
        negative_rank: 0,
    };
    let missing = || Error::InvalidConfig("mode lost a term".into());
    for h in Helicity::ALL {
        let k = h.index();
        for (freq, dagger, partner) in [
            (Frequency::Positive, false, &b.lambda_s[k] + &b.rho_a[k]),
            (Frequency::Negative, true, &b.lambda_a[k] - &b.rho_s[k]),
        ] {
            let coeff = nu.coefficient(a_symbol(dagger, h), freq).ok_or_else(missing)?;
            let image = dirac_projection(p, coeff, freq)?;
            out.partner_residual = out.partner_residual.max(image.max_abs_diff(&partner)?);
            out.eigenspace_residual = out.eigenspace_residual.max(slash_eigen_residual(p, &image, freq)?);
            match freq {
                Frequency::Positive => out.positive_images.push(image),
                Frequency::Negative => out.negative_images.push(image),
            }
        }
    }
    let scale = slash(p).max_abs().max(T::one());
    out.positive_rank = CMatrix::from_columns(&out.positive_images).rank(tol * scale);
    out.negative_rank = CMatrix::from_columns(&out.negative_images).rank(tol * scale);
    Ok(out)
}
