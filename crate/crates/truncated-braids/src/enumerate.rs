//! Todd–Coxeter coset enumeration.
//!
//! The enumerator runs the HLT strategy: relators are scanned and filled from
//! every live coset in definition order, a coincidence queue is drained before
//! anything else happens, and a scan-only lookahead pass fires when the live
//! count reaches 75% of the cap. Every choice below (definition order, which
//! coset survives a merge, compaction order) is fixed so that equal inputs
//! produce bit-identical tables.

use std::collections::VecDeque;

use thiserror::Error;

use crate::perm::Perm;
use crate::presentation::{Presentation, PresentationError};
use crate::word::{Letter, Word};

/// Default ceiling on simultaneously live cosets.
pub const DEFAULT_CAP: usize = 1_000_000;

const UNDEF: u32 = u32::MAX;

#[derive(Debug, Error)]
pub enum EnumerationError {
    #[error("cap must be at least 1")]
    ZeroCap,
    #[error(transparent)]
    InvalidWord(#[from] PresentationError),
    #[error("enumeration is not complete; no table available")]
    Incomplete,
    #[error("order cross-check mismatch: index method gives {index_method}, permutation method gives {perm_method}")]
    OrderMismatch { index_method: u64, perm_method: u64 },
    #[error("group order {order} is not divisible by subgroup index {index}")]
    NonDividingIndex { order: u64, index: u64 },
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
}

/// Outcome of a cap-bounded computation.
///
/// `CapExceeded` means the bound was hit; it proves nothing about the group
/// being infinite.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Capped<T> {
    Complete(T),
    CapExceeded { cap: usize },
}

impl<T> Capped<T> {
    pub fn complete(self) -> Option<T> {
        match self {
            Capped::Complete(v) => Some(v),
            Capped::CapExceeded { .. } => None,
        }
    }

    pub fn is_complete(&self) -> bool {
        matches!(self, Capped::Complete(_))
    }
}

/// Counters reported alongside every enumeration.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct EnumStats {
    /// Cosets ever defined, including coset 0.
    pub total_defined: u64,
    /// Peak number of simultaneously live cosets.
    pub max_live: usize,
    /// Coincidences processed (cosets merged away).
    pub coincidences: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EnumStatus {
    Complete { index: usize },
    CapExceeded { cap: usize },
}

/// A complete, compacted coset table: every action is defined and mutually
/// consistent, and live cosets are numbered 0..size-1 in discovery order with
/// coset 0 the subgroup itself.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetTable {
    generator_count: usize,
    size: usize,
    targets: Vec<u32>,
}

impl CosetTable {
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn generator_count(&self) -> usize {
        self.generator_count
    }

    fn width(&self) -> usize {
        self.generator_count * 2
    }

    /// The coset reached from `coset` by one letter.
    pub fn target(&self, coset: usize, letter: Letter) -> usize {
        self.targets[coset * self.width() + column(letter)] as usize
    }

    /// The coset reached from `start` by tracing a whole word.
    pub fn trace(&self, start: usize, word: &Word) -> usize {
        word.letters().iter().fold(start, |c, &l| self.target(c, l))
    }
}

/// A completed enumeration: its status, statistics, and (when complete) the
/// compacted table together with the inputs that produced it.
#[derive(Clone, Debug)]
pub struct EnumerationResult {
    presentation: Presentation,
    subgroup_generators: Vec<Word>,
    status: EnumStatus,
    stats: EnumStats,
    table: Option<CosetTable>,
}

impl EnumerationResult {
    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn subgroup_generators(&self) -> &[Word] {
        &self.subgroup_generators
    }

    pub fn status(&self) -> &EnumStatus {
        &self.status
    }

    pub fn stats(&self) -> &EnumStats {
        &self.stats
    }

    pub fn table(&self) -> Option<&CosetTable> {
        self.table.as_ref()
    }

    /// The subgroup index, when the enumeration completed.
    pub fn index(&self) -> Option<usize> {
        match self.status {
            EnumStatus::Complete { index } => Some(index),
            EnumStatus::CapExceeded { .. } => None,
        }
    }

    /// Text dump of the completed table for golden tests.
    ///
    /// One header line with the presentation hash and index, then one line per
    /// coset with tab-separated targets in column order g1, g1^-1, g2, g2^-1…
    pub fn table_dump(&self) -> Option<String> {
        let table = self.table.as_ref()?;
        let width = table.width();
        let mut out = format!(
            "# presentation={:016x} index={}\n",
            self.presentation.content_hash(),
            table.size
        );
        for c in 0..table.size {
            let row: Vec<String> = (0..width)
                .map(|col| table.targets[c * width + col].to_string())
                .collect();
            out.push_str(&row.join("\t"));
            out.push('\n');
        }
        Some(out)
    }
}

fn column(letter: Letter) -> usize {
    letter.gen * 2 + letter.inverse as usize
}

fn word_columns(word: &Word) -> Vec<usize> {
    word.letters().iter().map(|&l| column(l)).collect()
}

struct Engine {
    width: usize,
    cap: usize,
    threshold: usize,
    lookahead_armed: bool,
    rows: Vec<u32>,
    parent: Vec<u32>,
    live: usize,
    stats: EnumStats,
    queue: VecDeque<u32>,
}

/// Internal signal: the live-coset cap was hit.
struct CapHit;

impl Engine {
    fn new(width: usize, cap: usize) -> Self {
        let mut engine = Engine {
            width,
            cap,
            threshold: std::cmp::max(1, cap / 4 * 3),
            lookahead_armed: true,
            rows: Vec::new(),
            parent: Vec::new(),
            live: 0,
            stats: EnumStats::default(),
            queue: VecDeque::new(),
        };
        // coset 0 is the subgroup itself
        engine.rows.resize(width, UNDEF);
        engine.parent.push(0);
        engine.live = 1;
        engine.stats.total_defined = 1;
        engine.stats.max_live = 1;
        engine
    }

    #[inline]
    fn entry(&self, c: u32, col: usize) -> u32 {
        self.rows[c as usize * self.width + col]
    }

    #[inline]
    fn set(&mut self, c: u32, col: usize, v: u32) {
        self.rows[c as usize * self.width + col] = v;
    }

    /// Union-find lookup with path halving.
    fn find(&mut self, mut c: u32) -> u32 {
        loop {
            let p = self.parent[c as usize];
            if p == c {
                return c;
            }
            let gp = self.parent[p as usize];
            self.parent[c as usize] = gp;
            c = gp;
        }
    }

    fn define(&mut self, from: u32, col: usize) -> Result<u32, CapHit> {
        if self.live >= self.cap {
            return Err(CapHit);
        }
        // coset ids are u32; running out of id space counts as capping out
        if self.parent.len() >= (u32::MAX - 1) as usize {
            return Err(CapHit);
        }
        let id = self.parent.len() as u32;
        self.rows.resize(self.rows.len() + self.width, UNDEF);
        self.parent.push(id);
        self.live += 1;
        self.stats.total_defined += 1;
        self.stats.max_live = self.stats.max_live.max(self.live);
        debug_assert_eq!(self.entry(from, col), UNDEF);
        self.set(from, col, id);
        self.set(id, col ^ 1, from);
        Ok(id)
    }

    /// Scan a relator from `start`, defining cosets to bridge any gap.
    fn scan_and_fill(&mut self, start: u32, rel: &[usize]) -> Result<(), CapHit> {
        let mut f = start;
        let mut i = 0usize;
        let mut b = start;
        let mut j = rel.len();
        loop {
            while i < j {
                let t = self.entry(f, rel[i]);
                if t == UNDEF {
                    break;
                }
                f = t;
                i += 1;
            }
            if i == j {
                if f != b {
                    self.coincide(f, b);
                }
                return Ok(());
            }
            while j > i {
                let t = self.entry(b, rel[j - 1] ^ 1);
                if t == UNDEF {
                    break;
                }
                b = t;
                j -= 1;
            }
            if j == i {
                if f != b {
                    self.coincide(f, b);
                }
                return Ok(());
            }
            if j == i + 1 {
                self.set(f, rel[i], b);
                self.set(b, rel[i] ^ 1, f);
                debug_assert!(self.check_pair(f, rel[i]));
                return Ok(());
            }
            self.define(f, rel[i])?;
        }
    }

    /// Lookahead scan: close or collapse what the current table already
    /// forces, but never define a coset.
    fn scan_only(&mut self, start: u32, rel: &[usize]) {
        let mut f = start;
        let mut i = 0usize;
        let mut b = start;
        let mut j = rel.len();
        while i < j {
            let t = self.entry(f, rel[i]);
            if t == UNDEF {
                break;
            }
            f = t;
            i += 1;
        }
        if i == j {
            if f != b {
                self.coincide(f, b);
            }
            return;
        }
        while j > i {
            let t = self.entry(b, rel[j - 1] ^ 1);
            if t == UNDEF {
                break;
            }
            b = t;
            j -= 1;
        }
        if j == i {
            if f != b {
                self.coincide(f, b);
            }
        } else if j == i + 1 {
            self.set(f, rel[i], b);
            self.set(b, rel[i] ^ 1, f);
            debug_assert!(self.check_pair(f, rel[i]));
        }
    }

    fn coincide(&mut self, a: u32, b: u32) {
        debug_assert!(self.queue.is_empty());
        self.merge(a, b);
        self.process_queue();
    }

    fn merge(&mut self, a: u32, b: u32) {
        let a = self.find(a);
        let b = self.find(b);
        if a == b {
            return;
        }
        let (keep, kill) = if a < b { (a, b) } else { (b, a) };
        self.parent[kill as usize] = keep;
        self.live -= 1;
        self.stats.coincidences += 1;
        self.queue.push_back(kill);
    }

    /// Drain the coincidence queue, transferring each dead coset's facts onto
    /// the surviving representative.
    fn process_queue(&mut self) {
        while let Some(dead) = self.queue.pop_front() {
            for col in 0..self.width {
                let tgt = self.entry(dead, col);
                if tgt == UNDEF {
                    continue;
                }
                let inv = col ^ 1;
                if self.entry(tgt, inv) == dead {
                    self.set(tgt, inv, UNDEF);
                }
                let mu = self.find(dead);
                let nu = self.find(tgt);
                let via_mu = self.entry(mu, col);
                if via_mu != UNDEF {
                    self.merge(nu, via_mu);
                } else {
                    let via_nu = self.entry(nu, inv);
                    if via_nu != UNDEF {
                        self.merge(mu, via_nu);
                    } else {
                        self.set(mu, col, nu);
                        self.set(nu, inv, mu);
                        debug_assert!(self.check_pair(mu, col));
                    }
                }
            }
        }
    }

    /// Local consistency of one freshly written pair (debug builds only).
    #[cfg(debug_assertions)]
    fn check_pair(&self, c: u32, col: usize) -> bool {
        let t = self.entry(c, col);
        t != UNDEF && self.entry(t, col ^ 1) == c
    }

    #[cfg(not(debug_assertions))]
    fn check_pair(&self, _c: u32, _col: usize) -> bool {
        true
    }

    fn lookahead(&mut self, from: u32, relators: &[Vec<usize>]) {
        let mut c = from;
        while (c as usize) < self.parent.len() {
            if self.find(c) == c {
                for rel in relators {
                    self.scan_only(c, rel);
                    if self.find(c) != c {
                        break;
                    }
                }
            }
            c += 1;
        }
    }

    fn run(&mut self, relators: &[Vec<usize>], subgens: &[Vec<usize>]) -> Result<(), CapHit> {
        for sg in subgens {
            self.scan_and_fill(0, sg)?;
        }
        let mut c: u32 = 0;
        while (c as usize) < self.parent.len() {
            if self.find(c) != c {
                c += 1;
                continue;
            }
            if self.lookahead_armed && self.live >= self.threshold {
                self.lookahead(c, relators);
                self.lookahead_armed = false;
                if self.find(c) != c {
                    c += 1;
                    continue;
                }
            }
            if !self.lookahead_armed && self.live < self.threshold / 2 {
                self.lookahead_armed = true;
            }
            let mut alive = true;
            for rel in relators {
                self.scan_and_fill(c, rel)?;
                if self.find(c) != c {
                    alive = false;
                    break;
                }
            }
            if alive {
                for col in 0..self.width {
                    if self.entry(c, col) == UNDEF {
                        self.define(c, col)?;
                    }
                }
            }
            c += 1;
        }
        Ok(())
    }

    /// Renumber live cosets by first-discovery order into a dense table.
    fn compact(&mut self) -> Result<CosetTable, EnumerationError> {
        let defined = self.parent.len();
        let mut newid = vec![UNDEF; defined];
        let mut next: u32 = 0;
        for c in 0..defined as u32 {
            if self.find(c) == c {
                newid[c as usize] = next;
                next += 1;
            }
        }
        let size = next as usize;
        if size != self.live {
            return Err(EnumerationError::Inconsistent(format!(
                "live count {} disagrees with root count {}",
                self.live, size
            )));
        }
        let mut targets = vec![UNDEF; size * self.width];
        for c in 0..defined as u32 {
            if self.find(c) != c {
                continue;
            }
            let nc = newid[c as usize] as usize;
            for col in 0..self.width {
                let t = self.entry(c, col);
                if t == UNDEF {
                    return Err(EnumerationError::Inconsistent(format!(
                        "undefined entry at live coset {c}, column {col}"
                    )));
                }
                let root = self.find(t);
                targets[nc * self.width + col] = newid[root as usize];
            }
        }
        Ok(CosetTable {
            generator_count: self.width / 2,
            size,
            targets,
        })
    }
}

/// Enumerate the cosets of the subgroup generated by `subgroup_generators`
/// in the group presented by `presentation`.
///
/// Completes with the index and a verified table when the index is found
/// within `cap` live cosets; reports `CapExceeded` otherwise. Deterministic:
/// equal inputs give identical tables and statistics.
pub fn enumerate(
    presentation: &Presentation,
    subgroup_generators: &[Word],
    cap: usize,
) -> Result<EnumerationResult, EnumerationError> {
    if cap == 0 {
        return Err(EnumerationError::ZeroCap);
    }
    for w in subgroup_generators {
        presentation.check_word(w)?;
    }
    let relators: Vec<Vec<usize>> = presentation.relators().iter().map(word_columns).collect();
    let subgens: Vec<Vec<usize>> = subgroup_generators
        .iter()
        .map(|w| word_columns(&w.free_reduce()))
        .collect();
    let mut engine = Engine::new(presentation.generator_count() * 2, cap);
    match engine.run(&relators, &subgens) {
        Err(CapHit) => Ok(EnumerationResult {
            presentation: presentation.clone(),
            subgroup_generators: subgroup_generators.to_vec(),
            status: EnumStatus::CapExceeded { cap },
            stats: engine.stats,
            table: None,
        }),
        Ok(()) => {
            let table = engine.compact()?;
            verify_table(&table, presentation, subgroup_generators)?;
            let index = table.size();
            Ok(EnumerationResult {
                presentation: presentation.clone(),
                subgroup_generators: subgroup_generators.to_vec(),
                status: EnumStatus::Complete { index },
                stats: engine.stats,
                table: Some(table),
            })
        }
    }
}

/// Completion check: mutual consistency, every relator closing from every
/// coset, and every subgroup generator fixing coset 0.
fn verify_table(
    table: &CosetTable,
    presentation: &Presentation,
    subgroup_generators: &[Word],
) -> Result<(), EnumerationError> {
    let width = table.width();
    for c in 0..table.size() {
        for col in 0..width {
            let t = table.targets[c * width + col] as usize;
            if t >= table.size() {
                return Err(EnumerationError::Inconsistent(format!(
                    "target out of range at coset {c}"
                )));
            }
            if table.targets[t * width + (col ^ 1)] as usize != c {
                return Err(EnumerationError::Inconsistent(format!(
                    "mutual consistency broken at coset {c}, column {col}"
                )));
            }
        }
    }
    for relator in presentation.relators() {
        for c in 0..table.size() {
            if table.trace(c, relator) != c {
                return Err(EnumerationError::Inconsistent(format!(
                    "relator does not close from coset {c}"
                )));
            }
        }
    }
    for sg in subgroup_generators {
        if table.trace(0, sg) != 0 {
            return Err(EnumerationError::Inconsistent(
                "subgroup generator does not fix coset 0".into(),
            ));
        }
    }
    Ok(())
}

/// The order of the presented group, by enumerating over the trivial
/// subgroup.
pub fn group_order(
    presentation: &Presentation,
    cap: usize,
) -> Result<Capped<u64>, EnumerationError> {
    let result = enumerate(presentation, &[], cap)?;
    Ok(match result.status {
        EnumStatus::Complete { index } => Capped::Complete(index as u64),
        EnumStatus::CapExceeded { cap } => Capped::CapExceeded { cap },
    })
}

/// The permutation action on coset indices read off a completed table.
#[derive(Clone, Debug)]
pub struct PermutationRep {
    degree: usize,
    images: Vec<Perm>,
    inverses: Vec<Perm>,
}

impl PermutationRep {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generator_image(&self, gen: usize) -> &Perm {
        &self.images[gen]
    }

    /// Image of a word: left-to-right composition of generator images.
    pub fn word_image(&self, word: &Word) -> Result<Perm, EnumerationError> {
        let mut images: Vec<usize> = (0..self.degree).collect();
        for letter in word.letters() {
            if letter.gen >= self.images.len() {
                return Err(EnumerationError::InvalidWord(
                    PresentationError::GeneratorOutOfRange {
                        gen: letter.gen,
                        count: self.images.len(),
                    },
                ));
            }
            let perm = if letter.inverse {
                &self.inverses[letter.gen]
            } else {
                &self.images[letter.gen]
            };
            for img in images.iter_mut() {
                *img = perm.apply(*img);
            }
        }
        Perm::from_images(images)
            .map_err(|e| EnumerationError::Inconsistent(format!("non-bijective word image: {e}")))
    }
}

/// Read the permutation representation off a complete enumeration and verify
/// it: bijective images, relators acting trivially, subgroup generators
/// fixing coset 0.
pub fn perm_rep(result: &EnumerationResult) -> Result<PermutationRep, EnumerationError> {
    let table = result.table().ok_or(EnumerationError::Incomplete)?;
    let degree = table.size();
    let mut images = Vec::with_capacity(table.generator_count());
    for gen in 0..table.generator_count() {
        let imgs: Vec<usize> = (0..degree)
            .map(|c| table.target(c, Letter::new(gen)))
            .collect();
        let perm = Perm::from_images(imgs).map_err(|e| {
            EnumerationError::Inconsistent(format!("generator {gen} image not bijective: {e}"))
        })?;
        images.push(perm);
    }
    let inverses: Vec<Perm> = images.iter().map(Perm::inverse).collect();
    let rep = PermutationRep {
        degree,
        images,
        inverses,
    };
    for relator in result.presentation().relators() {
        if !rep.word_image(relator)?.is_identity() {
            return Err(EnumerationError::Inconsistent(
                "relator image is not the identity permutation".into(),
            ));
        }
    }
    for sg in result.subgroup_generators() {
        if rep.word_image(sg)?.apply(0) != 0 {
            return Err(EnumerationError::Inconsistent(
                "subgroup generator does not fix the base point".into(),
            ));
        }
    }
    Ok(rep)
}

/// The order of the image of `word` in the presented group, computed two
/// independent ways that must agree: |G| / [G : <w>] via two enumerations,
/// and the order of the word's image in the regular representation.
pub fn element_order(
    presentation: &Presentation,
    word: &Word,
    cap: usize,
) -> Result<Capped<u64>, EnumerationError> {
    presentation.check_word(word)?;
    let full = enumerate(presentation, &[], cap)?;
    let order = match full.status() {
        EnumStatus::Complete { index } => *index as u64,
        EnumStatus::CapExceeded { cap } => return Ok(Capped::CapExceeded { cap: *cap }),
    };
    let sub = enumerate(presentation, std::slice::from_ref(word), cap)?;
    let index = match sub.status() {
        EnumStatus::Complete { index } => *index as u64,
        EnumStatus::CapExceeded { cap } => return Ok(Capped::CapExceeded { cap: *cap }),
    };
    if order % index != 0 {
        return Err(EnumerationError::NonDividingIndex { order, index });
    }
    let by_index = order / index;
    let by_perm = perm_rep(&full)?.word_image(word)?.order();
    if by_index != by_perm {
        return Err(EnumerationError::OrderMismatch {
            index_method: by_index,
            perm_method: by_perm,
        });
    }
    Ok(Capped::Complete(by_index))
}
