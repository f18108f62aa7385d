//! Reidemeister–Schreier rewriting for cyclic covers and Tietze moves.

use num_integer::Integer;

use super::presentation::{CyclicCharacter, Presentation};
use super::word::{generator_of, letter, Letter, Word};
use super::GroupError;

/// Kernel presentation over the transversal `g^0, …, g^{d-1}` where `g` is
/// the first generator whose image is a unit. Generator `a ≠ g` gives
/// `a_j = g^j a g^{-j'}`, and `g` gives the single generator `g_pow{d} = g^d`.
/// Relator `r` gives `r@j`, the rewrite of `g^j r g^{-j}`.
pub fn reidemeister_schreier(p: &Presentation, chi: &CyclicCharacter) -> Result<Presentation, GroupError> {
    let d = chi.modulus() as i64;
    let images = chi.images();
    let g = (0..p.num_gens())
        .find(|&i| images[i].gcd(&d) == 1)
        .ok_or(GroupError::NotSurjective(chi.modulus()))?;
    let u_inv = images[g].extended_gcd(&d).x.rem_euclid(d);
    let shift: Vec<i64> = images.iter().map(|c| (c * u_inv).rem_euclid(d)).collect();

    let mut names = Vec::new();
    let mut sym = vec![Vec::new(); p.num_gens()];
    for (a, name) in p.gens().iter().enumerate() {
        if a == g {
            names.push(format!("{name}_pow{d}"));
            sym[a] = vec![None; d as usize];
            sym[a][d as usize - 1] = Some(names.len() - 1);
        } else {
            for j in 0..d {
                names.push(format!("{name}_{j}"));
                sym[a].push(Some(names.len() - 1));
            }
        }
    }

    let rewrite = |r: &Word, start: i64| -> Word {
        let mut j = start;
        let mut out: Vec<Letter> = Vec::new();
        for &l in r.letters() {
            let a = generator_of(l);
            if l > 0 {
                if let Some(s) = sym[a][j as usize] {
                    out.push(letter(s, true));
                }
                j = (j + shift[a]) % d;
            } else {
                let i = (j - shift[a]).rem_euclid(d);
                if let Some(s) = sym[a][i as usize] {
                    out.push(letter(s, false));
                }
                j = i;
            }
        }
        debug_assert_eq!(j, start);
        Word::from_letters(out)
    };

    let mut rels = Vec::new();
    let mut labels = Vec::new();
    for (r, l) in p.rels().iter().zip(p.labels()) {
        for j in 0..d {
            rels.push(rewrite(r, j));
            labels.push(format!("{l}@{j}"));
        }
    }
    let mut notes = p.notes.clone();
    notes.push(format!(
        "kernel of the character {:?} mod {d}, transversal powers of {}",
        images, p.gens()[g]
    ));
    Ok(Presentation::from_parts(names, rels, labels, notes))
}

/// Solves relator `rel` for generator `gen` (which must occur in it exactly
/// once), substitutes into the other relators and removes both.
pub fn tietze_eliminate(p: &Presentation, gen: usize, rel: usize) -> Result<Presentation, GroupError> {
    let not = || GroupError::NotEliminable {
        gen: p.gens().get(gen).cloned().unwrap_or_else(|| gen.to_string()),
        relator: p.labels().get(rel).cloned().unwrap_or_else(|| rel.to_string()),
    };
    if gen >= p.num_gens() || rel >= p.num_rels() {
        return Err(not());
    }
    let r = &p.rels()[rel];
    let hits: Vec<usize> = (0..r.len()).filter(|&i| generator_of(r.letters()[i]) == gen).collect();
    if hits.len() != 1 {
        return Err(not());
    }
    let i = hits[0];
    let u = Word::from_letters(r.letters()[..i].iter().copied());
    let v = Word::from_letters(r.letters()[i + 1..].iter().copied());
    // u g v = 1 gives g = u^-1 v^-1; u g^-1 v = 1 gives g = v u.
    let image = if r.letters()[i] > 0 { u.inverse().mul(&v.inverse()) } else { v.mul(&u) };
    let reindex = |k: usize| Some(if k > gen { k - 1 } else { k });
    let mut rels = Vec::new();
    let mut labels = Vec::new();
    for (k, (w, l)) in p.rels().iter().zip(p.labels()).enumerate() {
        if k != rel {
            rels.push(w.substitute(gen, &image).map_generators(reindex));
            labels.push(l.clone());
        }
    }
    let mut gens = p.gens().to_vec();
    gens.remove(gen);
    Ok(Presentation::from_parts(gens, rels, labels, p.notes.clone()))
}

/// Adds each named generator as a relator, eliminates it with that relator
/// and drops relators that became trivial.
pub fn kill_generators(p: &Presentation, gens: &[&str]) -> Result<Presentation, GroupError> {
    let mut q = p.clone();
    for name in gens {
        let g = q.gen_index(name).ok_or_else(|| GroupError::UnknownGenerator(name.to_string()))?;
        q = q.with_relator(Word::gen(g), format!("kill {name}"))?;
        q = tietze_eliminate(&q, g, q.num_rels() - 1)?;
    }
    if !gens.is_empty() {
        q.notes.push(format!("killed {}", gens.join(", ")));
    }
    Ok(q.drop_trivial())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::abelianize;

    fn pres(s: &str) -> Presentation {
        s.parse().unwrap()
    }

    #[test]
    fn schreier_counts() {
        let free = pres("gens: a, b");
        let chi = CyclicCharacter::new(&free, 2, vec![1, 0]).unwrap();
        let k = reidemeister_schreier(&free, &chi).unwrap();
        assert_eq!(k.num_gens(), 3);
        assert_eq!(k.num_rels(), 0);
        let cyc = pres("gens: a");
        let chi = CyclicCharacter::new(&cyc, 5, vec![1]).unwrap();
        let k = reidemeister_schreier(&cyc, &chi).unwrap();
        assert_eq!(k.gens(), &["a_pow5".to_string()]);
    }

    #[test]
    fn kernel_of_dihedral() {
        // S3 → Z/2 has kernel Z/3.
        let p = pres("gens: a, b ; rels: a^2, b^2, (a*b)^3");
        let chi = CyclicCharacter::new(&p, 2, vec![1, 1]).unwrap();
        let k = reidemeister_schreier(&p, &chi).unwrap();
        assert_eq!(k.num_gens(), 3);
        assert_eq!(k.num_rels(), 6);
        assert_eq!(abelianize(&k).to_string(), "Z/3");
    }

    #[test]
    fn not_surjective() {
        let p = pres("gens: a, b");
        let chi = CyclicCharacter::new(&p, 6, vec![2, 3]).unwrap();
        assert!(matches!(reidemeister_schreier(&p, &chi), Err(GroupError::NotSurjective(6))));
    }

    #[test]
    fn tietze_moves() {
        let p = pres("gens: a, b ; rels: b*a^-1");
        let q = tietze_eliminate(&p, 1, 0).unwrap();
        assert_eq!(q.to_string(), "gens: a ; rels: ");
        let p = pres("gens: a, b ; rels: a*b*a, [a,b]");
        assert!(tietze_eliminate(&p, 0, 0).is_err());
        let q = tietze_eliminate(&p, 1, 0).unwrap();
        assert_eq!(abelianize(&q), abelianize(&p));
        let k = kill_generators(&pres("gens: a, b ; rels: [a,b]"), &["b"]).unwrap();
        assert_eq!(k.num_gens(), 1);
        assert_eq!(k.num_rels(), 0);
    }
}
