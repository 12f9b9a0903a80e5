//! Functorial evaluation of J: slice-by-slice transport of a sparse state
//! vector through the diagram, with per-component framing corrections
//! theta^{f - writhe}.
//!
//! The transport is generic over the coefficient scalars: symbolic
//! Z[v, v^-1], specialized Z[xi_r] (with a Galois embedding exponent), or a
//! truncated Taylor series in h used by the degree-bound instruments.

use std::collections::{BTreeMap, HashMap};

use num_rational::BigRational;
use num_traits::Zero;
use thiserror::Error;

use crate::diagram::{
    components_any, CouponSignature, ElementaryPiece, LinkError, SlicedDiagram,
};
use crate::exact::{h_expand, specialize_power, CyclotomicInteger, LaurentPoly};
use crate::rep::{e_div_entry, f_div_entry, k_entry, theta_coeff, theta_inv_coeff};
use crate::rep::{MorphismMatrix, ObjectWord, StrandObject};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EvalError {
    #[error(transparent)]
    Link(#[from] LinkError),
    #[error("component C{0} has no color")]
    UncoloredComponent(usize),
    #[error("coupon `{0}` is not allowed in symbolic mode")]
    CouponInSymbolicMode(String),
    #[error("unknown coupon `{0}`")]
    UnknownCoupon(String),
    #[error("coupon `{name}`: {detail}")]
    CouponMismatch { name: String, detail: String },
}

/// Coefficient ring for evaluation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RingMode {
    Symbolic,
    Specialized { r: u64, embedding: u64 },
}

/// A coupon color: boundary words plus an exact matrix over Z[xi].
#[derive(Clone, Debug)]
pub struct CouponData {
    pub signature: CouponSignature,
    /// row-major, rows = codomain dimension
    pub entries: Vec<CyclotomicInteger>,
}

pub type CouponTable = BTreeMap<String, CouponData>;

/// A morphism matrix over Z[xi] (the specialized open case).
#[derive(Clone, Debug, PartialEq)]
pub struct CycMorphism {
    pub domain: ObjectWord,
    pub codomain: ObjectWord,
    pub entries: Vec<CyclotomicInteger>,
}

/// Result of evaluating a colored diagram.
#[derive(Clone, Debug)]
pub enum JOutput {
    ClosedSymbolic(LaurentPoly),
    ClosedSpecialized(CyclotomicInteger),
    OpenSymbolic(MorphismMatrix),
    OpenSpecialized(CycMorphism),
}

impl JOutput {
    pub fn as_symbolic(&self) -> Option<&LaurentPoly> {
        match self {
            JOutput::ClosedSymbolic(p) => Some(p),
            _ => None,
        }
    }

    pub fn as_specialized(&self) -> Option<&CyclotomicInteger> {
        match self {
            JOutput::ClosedSpecialized(c) => Some(c),
            _ => None,
        }
    }
}

// ---------------------------------------------------------------------------
// scalar abstraction

pub(crate) trait EvalScalar: Clone + Send + Sync + 'static {
    fn is_zero(&self) -> bool;
    fn add_assign_ref(&mut self, o: &Self);
    fn mul_ref(&self, o: &Self) -> Self;
}

impl EvalScalar for LaurentPoly {
    fn is_zero(&self) -> bool {
        LaurentPoly::is_zero(self)
    }
    fn add_assign_ref(&mut self, o: &Self) {
        *self += o;
    }
    fn mul_ref(&self, o: &Self) -> Self {
        self * o
    }
}

impl EvalScalar for CyclotomicInteger {
    fn is_zero(&self) -> bool {
        CyclotomicInteger::is_zero(self)
    }
    fn add_assign_ref(&mut self, o: &Self) {
        *self = &*self + o;
    }
    fn mul_ref(&self, o: &Self) -> Self {
        self * o
    }
}

/// Truncated Taylor expansion at v = e^{h/2}: coefficients of h^0..h^D.
#[derive(Clone, Debug, PartialEq)]
pub(crate) struct HSeries(pub Vec<BigRational>);

impl EvalScalar for HSeries {
    fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }
    fn add_assign_ref(&mut self, o: &Self) {
        for (a, b) in self.0.iter_mut().zip(o.0.iter()) {
            *a += b;
        }
    }
    fn mul_ref(&self, o: &Self) -> Self {
        let d = self.0.len();
        let mut out = vec![BigRational::zero(); d];
        for i in 0..d {
            if self.0[i].is_zero() {
                continue;
            }
            for j in 0..d - i {
                if o.0[j].is_zero() {
                    continue;
                }
                out[i + j] += &self.0[i] * &o.0[j];
            }
        }
        HSeries(out)
    }
}

pub(crate) trait EvalMode: Sync {
    type S: EvalScalar;
    fn one(&self) -> Self::S;
    fn lift(&self, p: &LaurentPoly) -> Self::S;
    fn coupon_entry(&self, name: &str, c: &CyclotomicInteger) -> Result<Self::S, EvalError>;
}

pub(crate) struct SymbolicMode;

impl EvalMode for SymbolicMode {
    type S = LaurentPoly;
    fn one(&self) -> LaurentPoly {
        LaurentPoly::one()
    }
    fn lift(&self, p: &LaurentPoly) -> LaurentPoly {
        p.clone()
    }
    fn coupon_entry(&self, name: &str, _c: &CyclotomicInteger) -> Result<LaurentPoly, EvalError> {
        Err(EvalError::CouponInSymbolicMode(name.to_string()))
    }
}

pub(crate) struct SpecializedMode {
    pub r: u64,
    pub embedding: u64,
}

impl EvalMode for SpecializedMode {
    type S = CyclotomicInteger;
    fn one(&self) -> CyclotomicInteger {
        CyclotomicInteger::one(self.r)
    }
    fn lift(&self, p: &LaurentPoly) -> CyclotomicInteger {
        specialize_power(p, self.r, self.embedding)
    }
    fn coupon_entry(
        &self,
        name: &str,
        c: &CyclotomicInteger,
    ) -> Result<CyclotomicInteger, EvalError> {
        if c.r() != self.r {
            return Err(EvalError::CouponMismatch {
                name: name.to_string(),
                detail: format!("entries live at r = {}, context has r = {}", c.r(), self.r),
            });
        }
        Ok(c.clone())
    }
}

pub(crate) struct HSeriesMode {
    pub order: usize,
}

impl EvalMode for HSeriesMode {
    type S = HSeries;
    fn one(&self) -> HSeries {
        self.lift(&LaurentPoly::one())
    }
    fn lift(&self, p: &LaurentPoly) -> HSeries {
        HSeries(h_expand(p, self.order))
    }
    fn coupon_entry(&self, name: &str, _c: &CyclotomicInteger) -> Result<HSeries, EvalError> {
        Err(EvalError::CouponInSymbolicMode(name.to_string()))
    }
}

// ---------------------------------------------------------------------------
// transport

type Key = Vec<u8>;
/// Per input digit pair: the (output digit, output digit, coefficient) fanout.
type CrossingTable<S> = Vec<Vec<(u8, u8, S)>>;

struct Transport<'a, M: EvalMode> {
    mode: &'a M,
    coupons: &'a CouponTable,
    tables: HashMap<(StrandObject, StrandObject, bool), CrossingTable<M::S>>,
}

impl<'a, M: EvalMode> Transport<'a, M> {
    fn new(mode: &'a M, coupons: &'a CouponTable) -> Self {
        Transport { mode, coupons, tables: HashMap::new() }
    }

    /// Sparse column table of the crossing morphism on (a, b): for each input
    /// digit pair, the list of (output digit at pos, at pos+1, coefficient).
    fn ensure_table(&mut self, a: StrandObject, b: StrandObject, positive: bool) {
        if self.tables.contains_key(&(a, b, positive)) {
            return;
        }
        let dim_a = a.dim();
        let dim_b = b.dim();
        let tmax = (2 * a.color).min(2 * b.color);
        let mut table = vec![Vec::new(); dim_a * dim_b];
        for i in 0..dim_a {
            for j in 0..dim_b {
                let targets = &mut table[i * dim_b + j];
                if positive {
                    // c = P Psi Thetabar
                    for t in 0..=tmax {
                        let (ce, ip) = match e_div_entry(a, t, i) {
                            Some(x) => x,
                            None => continue,
                        };
                        let (cf, jp) = match f_div_entry(b, t, j) {
                            Some(x) => x,
                            None => continue,
                        };
                        let psi = LaurentPoly::monomial(2 * a.weight(ip) * b.weight(jp), 1);
                        let coeff = &(&theta_coeff(t) * &ce) * &(&cf * &psi);
                        let s = self.mode.lift(&coeff);
                        if !s.is_zero() {
                            targets.push((jp as u8, ip as u8, s));
                        }
                    }
                } else {
                    // c^{-1} = Thetabar^{-1} Psi^{-1} P^{-1}
                    let psi = LaurentPoly::monomial(-2 * b.weight(j) * a.weight(i), 1);
                    for t in 0..=tmax {
                        let (ce, jp) = match e_div_entry(b, t, j) {
                            Some(x) => x,
                            None => continue,
                        };
                        let (cf, ip) = match f_div_entry(a, t, i) {
                            Some(x) => x,
                            None => continue,
                        };
                        let coeff = &(&theta_inv_coeff(t) * &ce) * &(&cf * &psi);
                        let s = self.mode.lift(&coeff);
                        if !s.is_zero() {
                            targets.push((jp as u8, ip as u8, s));
                        }
                    }
                }
            }
        }
        self.tables.insert((a, b, positive), table);
    }

    fn apply_crossing(
        &mut self,
        state: HashMap<Key, M::S>,
        word: &mut [StrandObject],
        pos: usize,
        positive: bool,
    ) -> HashMap<Key, M::S> {
        let a = word[pos];
        let b = word[pos + 1];
        self.ensure_table(a, b, positive);
        let table = &self.tables[&(a, b, positive)];
        let dim_b = b.dim();
        let mut out: HashMap<Key, M::S> = HashMap::with_capacity(state.len());
        for (key, amp) in state {
            let i = key[pos] as usize;
            let j = key[pos + 1] as usize;
            for (d0, d1, s) in &table[i * dim_b + j] {
                let mut nk = key.clone();
                nk[pos] = *d0;
                nk[pos + 1] = *d1;
                let v = amp.mul_ref(s);
                match out.get_mut(&nk) {
                    Some(acc) => acc.add_assign_ref(&v),
                    None => {
                        out.insert(nk, v);
                    }
                }
            }
        }
        out.retain(|_, v| !v.is_zero());
        word.swap(pos, pos + 1);
        out
    }

    fn apply_cup(
        &mut self,
        state: HashMap<Key, M::S>,
        word: &mut Vec<StrandObject>,
        pos: usize,
        left: bool,
        color: u64,
    ) -> HashMap<Key, M::S> {
        let module = StrandObject::module(color);
        let objs = if left {
            [module, StrandObject::dual(color)]
        } else {
            [StrandObject::dual(color), module]
        };
        let amps: Vec<M::S> = (0..module.dim())
            .map(|j| {
                if left {
                    self.mode.one()
                } else {
                    self.mode.lift(&k_entry(module, j, true))
                }
            })
            .collect();
        let mut out = HashMap::with_capacity(state.len() * amps.len());
        for (key, amp) in state {
            for (j, cup_amp) in amps.iter().enumerate() {
                let mut nk = Vec::with_capacity(key.len() + 2);
                nk.extend_from_slice(&key[..pos]);
                nk.push(j as u8);
                nk.push(j as u8);
                nk.extend_from_slice(&key[pos..]);
                out.insert(nk, amp.mul_ref(cup_amp));
            }
        }
        word.splice(pos..pos, objs);
        out
    }

    fn apply_cap(
        &mut self,
        state: HashMap<Key, M::S>,
        word: &mut Vec<StrandObject>,
        pos: usize,
        left: bool,
    ) -> HashMap<Key, M::S> {
        let module = if left { word[pos] } else { word[pos + 1] };
        debug_assert!(!module.is_dual());
        let amps: Vec<M::S> = (0..module.dim())
            .map(|i| {
                if left {
                    self.mode.lift(&k_entry(module, i, false))
                } else {
                    self.mode.one()
                }
            })
            .collect();
        let mut out: HashMap<Key, M::S> = HashMap::with_capacity(state.len());
        for (key, amp) in state {
            if key[pos] != key[pos + 1] {
                continue;
            }
            let i = key[pos] as usize;
            let mut nk = Vec::with_capacity(key.len() - 2);
            nk.extend_from_slice(&key[..pos]);
            nk.extend_from_slice(&key[pos + 2..]);
            let v = amp.mul_ref(&amps[i]);
            match out.get_mut(&nk) {
                Some(acc) => acc.add_assign_ref(&v),
                None => {
                    out.insert(nk, v);
                }
            }
        }
        out.retain(|_, v| !v.is_zero());
        word.drain(pos..pos + 2);
        out
    }

    fn apply_coupon(
        &mut self,
        state: HashMap<Key, M::S>,
        word: &mut Vec<StrandObject>,
        pos: usize,
        name: &str,
    ) -> Result<HashMap<Key, M::S>, EvalError> {
        let data = self
            .coupons
            .get(name)
            .ok_or_else(|| EvalError::UnknownCoupon(name.to_string()))?;
        let k = data.signature.domain.len();
        // boundary colors and orientations must match the declaration
        for (off, (color, sign)) in data.signature.domain.iter().enumerate() {
            let actual = word[pos + off];
            if actual.color != *color || actual.sign != *sign {
                return Err(EvalError::CouponMismatch {
                    name: name.to_string(),
                    detail: format!(
                        "domain letter {off} declared V{color}{sign} but strand is V{}{}",
                        actual.color, actual.sign
                    ),
                });
            }
        }
        let cod_objs: Vec<StrandObject> = data
            .signature
            .codomain
            .iter()
            .map(|(c, s)| StrandObject::new(*c, *s))
            .collect();
        let dom_dims: Vec<usize> = (0..k).map(|off| word[pos + off].dim()).collect();
        let cod_dims: Vec<usize> = cod_objs.iter().map(|o| o.dim()).collect();
        let dom_dim: usize = dom_dims.iter().product();
        let cod_dim: usize = cod_dims.iter().product();
        if data.entries.len() != dom_dim * cod_dim {
            return Err(EvalError::CouponMismatch {
                name: name.to_string(),
                detail: format!(
                    "matrix has {} entries, boundary needs {}",
                    data.entries.len(),
                    dom_dim * cod_dim
                ),
            });
        }
        let mut out: HashMap<Key, M::S> = HashMap::with_capacity(state.len());
        for (key, amp) in state {
            let mut col = 0usize;
            for off in 0..k {
                col = col * dom_dims[off] + key[pos + off] as usize;
            }
            for row in 0..cod_dim {
                let entry = &data.entries[row * dom_dim + col];
                if entry.is_zero() {
                    continue;
                }
                let s = self.mode.coupon_entry(name, entry)?;
                // decompose row into codomain digits
                let mut digits = vec![0u8; cod_dims.len()];
                let mut rest = row;
                for (slot, d) in cod_dims.iter().enumerate().rev() {
                    digits[slot] = (rest % d) as u8;
                    rest /= d;
                }
                let mut nk = Vec::with_capacity(key.len() - k + cod_dims.len());
                nk.extend_from_slice(&key[..pos]);
                nk.extend_from_slice(&digits);
                nk.extend_from_slice(&key[pos + k..]);
                let v = amp.mul_ref(&s);
                match out.get_mut(&nk) {
                    Some(acc) => acc.add_assign_ref(&v),
                    None => {
                        out.insert(nk, v);
                    }
                }
            }
        }
        out.retain(|_, v| !v.is_zero());
        word.splice(pos..pos + k, cod_objs);
        Ok(out)
    }

    /// Run the full diagram on an initial state over the bottom word.
    fn run(
        &mut self,
        diagram: &SlicedDiagram,
        port_color: &dyn Fn(usize, usize) -> u64,
        initial: HashMap<Key, M::S>,
        bottom_word: Vec<StrandObject>,
    ) -> Result<HashMap<Key, M::S>, EvalError> {
        let mut state = initial;
        let mut word = bottom_word;
        for (si, slice) in diagram.slices.iter().enumerate() {
            let mut pos = 0usize;
            let mut top = 0usize;
            for piece in slice {
                match piece {
                    ElementaryPiece::Id => pos += 1,
                    ElementaryPiece::XPos => {
                        state = self.apply_crossing(state, &mut word, pos, true);
                        pos += 2;
                    }
                    ElementaryPiece::XNeg => {
                        state = self.apply_crossing(state, &mut word, pos, false);
                        pos += 2;
                    }
                    ElementaryPiece::CupL | ElementaryPiece::CupR => {
                        let left = matches!(piece, ElementaryPiece::CupL);
                        let color = port_color(si + 1, top);
                        state = self.apply_cup(state, &mut word, pos, left, color);
                        pos += 2;
                    }
                    ElementaryPiece::CapL | ElementaryPiece::CapR => {
                        let left = matches!(piece, ElementaryPiece::CapL);
                        state = self.apply_cap(state, &mut word, pos, left);
                    }
                    ElementaryPiece::Coupon { name, outputs, .. } => {
                        state = self.apply_coupon(state, &mut word, pos, name)?;
                        pos += outputs;
                    }
                }
                top += piece.outputs();
            }
        }
        Ok(state)
    }
}

// ---------------------------------------------------------------------------
// public evaluation entry points

/// Evaluate a fully colored diagram. `colors` maps every component id to its
/// color n (meaning V_{n alpha}); framings correct blackboard framing through
/// theta^{f - writhe} on each closed component.
pub fn evaluate_j(
    diagram: &SlicedDiagram,
    colors: &BTreeMap<usize, u64>,
    framings: &BTreeMap<usize, i64>,
    mode: RingMode,
    coupons: &CouponTable,
) -> Result<JOutput, EvalError> {
    if matches!(mode, RingMode::Symbolic) {
        for slice in &diagram.slices {
            for piece in slice {
                if let ElementaryPiece::Coupon { name, .. } = piece {
                    return Err(EvalError::CouponInSymbolicMode(name.clone()));
                }
            }
        }
    }
    match mode {
        RingMode::Symbolic => {
            let m = SymbolicMode;
            evaluate_with(
                diagram,
                colors,
                framings,
                &m,
                coupons,
                JOutput::ClosedSymbolic,
                |gm| gm.into(),
            )
        }
        RingMode::Specialized { r, embedding } => {
            let m = SpecializedMode { r, embedding };
            evaluate_with(
                diagram,
                colors,
                framings,
                &m,
                coupons,
                JOutput::ClosedSpecialized,
                |gm| gm.into(),
            )
        }
    }
}

/// Closed-diagram evaluation in the truncated h-series ring.
pub(crate) fn evaluate_j_hseries(
    diagram: &SlicedDiagram,
    colors: &BTreeMap<usize, u64>,
    framings: &BTreeMap<usize, i64>,
    order: usize,
) -> Result<Vec<BigRational>, EvalError> {
    for slice in &diagram.slices {
        for piece in slice {
            if let ElementaryPiece::Coupon { name, .. } = piece {
                return Err(EvalError::CouponInSymbolicMode(name.clone()));
            }
        }
    }
    let mode = HSeriesMode { order };
    let setup = EvalSetup::prepare(diagram, colors, framings)?;
    if !diagram.is_closed() {
        return Err(LinkError::NotClosed.into());
    }
    let empty = CouponTable::new();
    let mut transport = Transport::new(&mode, &empty);
    let initial = HashMap::from([(Key::new(), mode.one())]);
    let state = transport.run(diagram, &setup.port_color(), initial, Vec::new())?;
    let correction = mode.lift(&setup.correction);
    let j = state
        .get(&Key::new())
        .cloned()
        .unwrap_or_else(|| HSeries(vec![BigRational::zero(); order + 1]));
    Ok(j.mul_ref(&correction).0)
}

struct EvalSetup {
    comp_of_port: BTreeMap<(usize, usize), usize>,
    colors: BTreeMap<usize, u64>,
    /// product of twist corrections over closed components
    correction: LaurentPoly,
}

impl EvalSetup {
    fn prepare(
        diagram: &SlicedDiagram,
        colors: &BTreeMap<usize, u64>,
        framings: &BTreeMap<usize, i64>,
    ) -> Result<EvalSetup, EvalError> {
        let comps = components_any(diagram)?;
        let mut comp_of_port = BTreeMap::new();
        for level in 0..diagram.levels.len() {
            for p in 0..diagram.levels[level] {
                comp_of_port.insert((level, p), comps.component_of(level, p));
            }
        }
        for c in 0..comps.count {
            if !colors.contains_key(&c) {
                return Err(EvalError::UncoloredComponent(c));
            }
        }
        // components touching the boundary get no framing correction
        let last = diagram.levels.len() - 1;
        let mut open = vec![false; comps.count];
        for p in 0..diagram.levels[0] {
            open[comp_of_port[&(0, p)]] = true;
        }
        for p in 0..diagram.levels[last] {
            open[comp_of_port[&(last, p)]] = true;
        }
        let mut correction = LaurentPoly::one();
        for c in 0..comps.count {
            if open[c] {
                continue;
            }
            let f = *framings.get(&c).unwrap_or(&0);
            let w = comps.writhe[c];
            let n = colors[&c];
            correction = &correction * &crate::rep::twist_scalar_power(n, f - w);
        }
        Ok(EvalSetup {
            comp_of_port,
            colors: colors.clone(),
            correction,
        })
    }

    fn port_color(&self) -> impl Fn(usize, usize) -> u64 + '_ {
        move |level, pos| self.colors[&self.comp_of_port[&(level, pos)]]
    }

    fn word_at(&self, diagram: &SlicedDiagram, level: usize) -> Vec<StrandObject> {
        (0..diagram.levels[level])
            .map(|p| {
                StrandObject::new(
                    self.colors[&self.comp_of_port[&(level, p)]],
                    diagram.orientations[level][p],
                )
            })
            .collect()
    }
}

fn evaluate_with<M: EvalMode>(
    diagram: &SlicedDiagram,
    colors: &BTreeMap<usize, u64>,
    framings: &BTreeMap<usize, i64>,
    mode: &M,
    coupons: &CouponTable,
    closed_out: impl Fn(M::S) -> JOutput,
    open_out: impl Fn(GenericMorphism<M::S>) -> JOutput,
) -> Result<JOutput, EvalError> {
    let setup = EvalSetup::prepare(diagram, colors, framings)?;
    let correction = mode.lift(&setup.correction);
    if diagram.is_closed() {
        let mut transport = Transport::new(mode, coupons);
        let initial = HashMap::from([(Key::new(), mode.one())]);
        let state = transport.run(diagram, &setup.port_color(), initial, Vec::new())?;
        let j = match state.get(&Key::new()) {
            Some(s) => s.mul_ref(&correction),
            None => mode.lift(&LaurentPoly::zero()),
        };
        return Ok(closed_out(j));
    }
    // open case: run one transport per domain basis vector
    let bottom = setup.word_at(diagram, 0);
    let top = setup.word_at(diagram, diagram.levels.len() - 1);
    let dom_word = ObjectWord(bottom.clone());
    let cod_word = ObjectWord(top);
    let dom_dim = dom_word.dim();
    let cod_dim = cod_word.dim();
    let mut entries = vec![mode.lift(&LaurentPoly::zero()); dom_dim * cod_dim];
    let mut transport = Transport::new(mode, coupons);
    for col in 0..dom_dim {
        let digits = dom_word.digits(col);
        let key: Key = digits.iter().map(|&d| d as u8).collect();
        let initial = HashMap::from([(key, mode.one())]);
        let state = transport.run(diagram, &setup.port_color(), initial, bottom.clone())?;
        for (key, amp) in state {
            let digits: Vec<usize> = key.iter().map(|&d| d as usize).collect();
            let row = cod_word.index(&digits);
            entries[row * dom_dim + col] = amp.mul_ref(&correction);
        }
    }
    Ok(open_out(GenericMorphism {
        domain: dom_word,
        codomain: cod_word,
        entries,
    }))
}

pub(crate) struct GenericMorphism<S> {
    pub domain: ObjectWord,
    pub codomain: ObjectWord,
    pub entries: Vec<S>,
}

impl From<GenericMorphism<LaurentPoly>> for JOutput {
    fn from(m: GenericMorphism<LaurentPoly>) -> JOutput {
        let mut out = MorphismMatrix::zero(m.domain.clone(), m.codomain.clone());
        let cols = m.domain.dim();
        for (i, e) in m.entries.into_iter().enumerate() {
            out.set(i / cols, i % cols, e);
        }
        JOutput::OpenSymbolic(out)
    }
}

impl From<GenericMorphism<CyclotomicInteger>> for JOutput {
    fn from(m: GenericMorphism<CyclotomicInteger>) -> JOutput {
        JOutput::OpenSpecialized(CycMorphism {
            domain: m.domain,
            codomain: m.codomain,
            entries: m.entries,
        })
    }
}
