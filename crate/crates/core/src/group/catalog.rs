use crate::bounds::Bounds;
use crate::error::{Error, Result};
use crate::group::table::GroupTable;
use crate::num::is_prime;
use crate::perm::Perm;

/// Generators for a named fixture group. Parametrized families take their
/// arguments in parentheses: cyclic(n), dihedral(2n), elementary(p,k),
/// cp_wr_cp(p).
pub fn catalog(name: &str) -> Result<Vec<Perm>> {
    let name = name.trim();
    match name {
        "s3" => return gens(&["(0 1)", "(0 1 2)"], 3),
        "s4" => return gens(&["(0 1)", "(0 1 2 3)"], 4),
        "a4" => return gens(&["(0 1 2)", "(0 1)(2 3)"], 4),
        "d8" => return gens(&["(0 1 2 3)", "(1 3)"], 4),
        "d16" => return gens(&["(0 1 2 3 4 5 6 7)", "(1 7)(2 6)(3 5)"], 8),
        "sl23" => {
            // SL(2,3) on the 8 nonzero vectors of F3^2, ordered (0,1), (0,2),
            // (1,0), (1,1), (1,2), (2,0), (2,1), (2,2). Generators: the shear
            // (x,y) -> (x+y,y) and the order-4 element (x,y) -> (2y,x).
            return Ok(vec![
                Perm::from_images(vec![3, 7, 2, 6, 1, 5, 0, 4])?,
                Perm::from_images(vec![5, 2, 0, 6, 3, 1, 7, 4])?,
            ]);
        }
        "pgl27" => {
            // Projective line over F7, points 0..6 and infinity = 7, under
            // x+1, 3x, 1/x.
            return Ok(vec![
                Perm::from_images(vec![1, 2, 3, 4, 5, 6, 0, 7])?,
                Perm::from_images(vec![0, 3, 6, 2, 5, 1, 4, 7])?,
                Perm::from_images(vec![7, 1, 4, 5, 2, 3, 6, 0])?,
            ]);
        }
        _ => {}
    }

    let (family, args) = parse_family(name)?;
    match (family, args.as_slice()) {
        ("cyclic", [n]) if *n >= 1 => {
            let n = *n;
            if n == 1 {
                return Ok(vec![Perm::identity(1)]);
            }
            let images: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
            Ok(vec![Perm::from_images(images)?])
        }
        ("dihedral", [order]) if *order >= 2 && *order % 2 == 0 => {
            let n = order / 2;
            match n {
                1 => gens(&["(0 1)"], 2),
                2 => gens(&["(0 1)", "(2 3)"], 4),
                _ => {
                    let rot: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
                    let refl: Vec<usize> = (0..n).map(|i| (n - i) % n).collect();
                    Ok(vec![Perm::from_images(rot)?, Perm::from_images(refl)?])
                }
            }
        }
        ("elementary", [p, k]) if is_prime(*p as u64) && *k >= 1 => {
            let (p, k) = (*p, *k);
            let degree = p * k;
            let mut out = Vec::with_capacity(k);
            for block in 0..k {
                let mut images: Vec<usize> = (0..degree).collect();
                for i in 0..p {
                    images[block * p + i] = block * p + (i + 1) % p;
                }
                out.push(Perm::from_images(images)?);
            }
            Ok(out)
        }
        ("cp_wr_cp", [p]) if is_prime(*p as u64) => {
            let p = *p;
            let degree = p * p;
            let mut b0: Vec<usize> = (0..degree).collect();
            for i in 0..p {
                b0[i] = (i + 1) % p;
            }
            let w: Vec<usize> = (0..degree).map(|i| (i + p) % degree).collect();
            Ok(vec![Perm::from_images(b0)?, Perm::from_images(w)?])
        }
        _ => Err(Error::UnknownName(name.to_string())),
    }
}

fn gens(specs: &[&str], degree: usize) -> Result<Vec<Perm>> {
    specs.iter().map(|s| Perm::parse_cycles(s, degree)).collect()
}

fn parse_family(name: &str) -> Result<(&str, Vec<usize>)> {
    let open = name.find('(').ok_or_else(|| Error::UnknownName(name.to_string()))?;
    if !name.ends_with(')') {
        return Err(Error::UnknownName(name.to_string()));
    }
    let family = &name[..open];
    let inner = &name[open + 1..name.len() - 1];
    let args: Vec<usize> = inner
        .split(',')
        .map(|a| a.trim().parse::<usize>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| Error::UnknownName(name.to_string()))?;
    if args.is_empty() {
        return Err(Error::UnknownName(name.to_string()));
    }
    Ok((family, args))
}

/// Fixture names accepted by `catalog`, families shown with placeholder
/// arguments.
pub fn catalog_names() -> Vec<&'static str> {
    vec![
        "s3",
        "s4",
        "a4",
        "d8",
        "d16",
        "sl23",
        "pgl27",
        "cyclic(n)",
        "dihedral(2n)",
        "elementary(p,k)",
        "cp_wr_cp(p)",
    ]
}

/// The (name, prime) pairs exercised by the full verification suite.
pub fn default_catalog() -> Vec<(String, u64)> {
    vec![
        ("s3".into(), 3),
        ("s4".into(), 2),
        ("a4".into(), 2),
        ("sl23".into(), 2),
        ("d8".into(), 2),
        ("d16".into(), 2),
        ("pgl27".into(), 2),
        ("cp_wr_cp(3)".into(), 3),
    ]
}

/// Closure of the named fixture's generators.
pub fn catalog_table(name: &str, bounds: &Bounds) -> Result<GroupTable> {
    let g = catalog(name)?;
    let degree = g.first().map(|p| p.degree()).unwrap_or(1);
    GroupTable::closure(&g, degree, bounds)
}
