//! Dynamical billiard: free flight plus specular reflection inside a closed
//! boundary. Reflection points are labeled in temporal order so they can be
//! handed straight to the slope coloring.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coloring::{color_by_slope, ChordLine, ColoredCompleteGraph, DegeneracyPolicy};
use crate::contour::{Contour, LabeledPoint, Point2, Vec2};
use crate::error::{Error, Result};
use crate::scalar::{lit, tol, Real};

/// Position plus unit direction of the moving particle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParticleState<R> {
    pub position: Point2<R>,
    pub direction: Vec2<R>,
}

impl<R: Real> ParticleState<R> {
    /// Normalizes the direction; rejects zero or non-finite input.
    pub fn new(position: Point2<R>, direction: Vec2<R>) -> Result<Self> {
        if !position.is_finite() || !direction.x.is_finite() || !direction.y.is_finite() {
            return Err(Error::InvalidParams("non-finite particle state".into()));
        }
        let direction = direction
            .normalized()
            .ok_or_else(|| Error::InvalidParams("zero direction".into()))?;
        Ok(Self {
            position,
            direction,
        })
    }
}

/// Why a simulation stopped.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Termination {
    Completed,
    CornerHit { bounce: usize },
    Grazing { bounce: usize },
}

/// What to do when a ray lands within `eps_corner` of a polyline vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CornerMode {
    /// Stop with a corner-hit termination (reflection at a corner is
    /// undefined).
    #[default]
    Stop,
    /// Reflect about the bisector of the two adjacent edge normals.
    Bisector,
}

/// Optional deterministic not-exactly-specular reflection: each outgoing
/// direction is rotated by a seeded angle drawn uniformly from
/// [-max_angle, max_angle] (radians).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReflectionNoise {
    pub seed: u64,
    pub max_angle: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct BilliardConfig {
    pub corner_mode: CornerMode,
    pub noise: Option<ReflectionNoise>,
}

/// A simulated run: reflection points in temporal order (indices 1..n) and
/// the outgoing direction after each bounce.
#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory<R> {
    pub boundary: Contour<R>,
    pub start: ParticleState<R>,
    pub reflections: Vec<LabeledPoint<R>>,
    pub directions_after: Vec<Vec2<R>>,
    pub termination: Termination,
}

/// First boundary hit of the ray from `state` and the specularly reflected
/// direction there.
pub fn next_reflection<R: Real>(
    boundary: &Contour<R>,
    state: &ParticleState<R>,
) -> Result<(Point2<R>, Vec2<R>)> {
    let (hit, normal) = first_hit(boundary, state, CornerMode::Stop)?;
    Ok((hit, reflect(&state.direction, &normal)))
}

fn reflect<R: Real>(d: &Vec2<R>, n: &Vec2<R>) -> Vec2<R> {
    let two = lit::<R>(2.0);
    let out = Vec2::new(d.x - two * d.dot(n) * n.x, d.y - two * d.dot(n) * n.y);
    out.normalized().unwrap_or(out)
}

/// Hit point plus the unit normal there, oriented against the incoming
/// direction.
fn first_hit<R: Real>(
    boundary: &Contour<R>,
    state: &ParticleState<R>,
    corner_mode: CornerMode,
) -> Result<(Point2<R>, Vec2<R>)> {
    let d = state.direction;
    match boundary {
        Contour::Circle { center, radius, .. } => {
            let rel = state.position - *center;
            let b = d.dot(&rel);
            let c0 = rel.norm_sq() - *radius * *radius;
            let disc = b * b - c0;
            if disc < R::zero() {
                return Err(Error::NoIntersection);
            }
            let sq = disc.sqrt();
            let (t1, t2) = (-b - sq, -b + sq);
            let t = if t1 > tol::eps_t::<R>() {
                t1
            } else if t2 > tol::eps_t::<R>() {
                t2
            } else {
                return Err(Error::NoIntersection);
            };
            let raw = state.position + d.scaled(t);
            // snap radially onto the circle to stop drift over long runs
            let radial = (raw - *center)
                .normalized()
                .ok_or(Error::NoIntersection)?;
            let hit = *center + radial.scaled(*radius);
            let inward = radial.scaled(-R::one());
            if d.dot(&inward).abs() <= tol::eps_graze::<R>() {
                return Err(Error::Grazing { bounce: 0 });
            }
            Ok((hit, inward))
        }
        _ => {
            let vs = boundary.vertex_list().expect("list variant");
            let m = vs.len();
            let mut best: Option<(R, usize, Point2<R>)> = None;
            for j in 0..m {
                let a = vs[j];
                let e = vs[(j + 1) % m] - a;
                let denom = d.cross(&e);
                if denom == R::zero() {
                    continue; // parallel
                }
                let ap = a - state.position;
                let t = ap.cross(&e) / denom;
                let u = ap.cross(&d) / denom;
                if t > tol::eps_t::<R>() && u >= R::zero() && u <= R::one() {
                    let better = match &best {
                        None => true,
                        Some((bt, _, _)) => t < *bt, // ties keep the lower segment index
                    };
                    if better {
                        best = Some((t, j, a + e.scaled(u)));
                    }
                }
            }
            let (_, seg, hit) = best.ok_or(Error::NoIntersection)?;
            let a = vs[seg];
            let b = vs[(seg + 1) % m];
            let near_a = hit.distance(&a) <= tol::eps_corner::<R>();
            let near_b = hit.distance(&b) <= tol::eps_corner::<R>();
            let normal = if near_a || near_b {
                match corner_mode {
                    CornerMode::Stop => return Err(Error::CornerHit { bounce: 0 }),
                    CornerMode::Bisector => {
                        let corner = if near_a { seg } else { (seg + 1) % m };
                        let prev = vs[(corner + m - 1) % m];
                        let next = vs[(corner + 1) % m];
                        let n1 = against(&(vs[corner] - prev).perp(), &d)?;
                        let n2 = against(&(next - vs[corner]).perp(), &d)?;
                        Vec2::new(n1.x + n2.x, n1.y + n2.y)
                            .normalized()
                            .ok_or(Error::NoIntersection)?
                    }
                }
            } else {
                against(&(b - a).perp(), &d)?
            };
            if d.dot(&normal).abs() <= tol::eps_graze::<R>() {
                return Err(Error::Grazing { bounce: 0 });
            }
            Ok((hit, normal))
        }
    }
}

/// Unit normal along `perp`, flipped if needed so it opposes `incoming`.
fn against<R: Real>(perp: &Vec2<R>, incoming: &Vec2<R>) -> Result<Vec2<R>> {
    let n = perp.normalized().ok_or(Error::NoIntersection)?;
    Ok(if incoming.dot(&n) > R::zero() {
        n.scaled(-R::one())
    } else {
        n
    })
}

/// Unit normal of the boundary nearest to `p`, oriented against `incoming`.
/// Used by verification code to check the reflection law independently.
pub fn normal_at<R: Real>(
    boundary: &Contour<R>,
    p: &Point2<R>,
    incoming: &Vec2<R>,
) -> Result<Vec2<R>> {
    match boundary {
        Contour::Circle { center, .. } => {
            let radial = (*p - *center).normalized().ok_or(Error::NoIntersection)?;
            against(&radial, incoming)
        }
        _ => {
            let vs = boundary.vertex_list().expect("list variant");
            let m = vs.len();
            let mut best = (R::infinity(), 0usize);
            for j in 0..m {
                let a = vs[j];
                let b = vs[(j + 1) % m];
                let d = segment_distance_for_normal(&a, &b, p);
                if d < best.0 {
                    best = (d, j);
                }
            }
            let e = vs[(best.1 + 1) % m] - vs[best.1];
            against(&e.perp(), incoming)
        }
    }
}

fn segment_distance_for_normal<R: Real>(a: &Point2<R>, b: &Point2<R>, p: &Point2<R>) -> R {
    let ab = *b - *a;
    let len_sq = ab.norm_sq();
    if len_sq == R::zero() {
        return (*p - *a).norm();
    }
    let u = ((*p - *a).dot(&ab) / len_sq).max(R::zero()).min(R::one());
    (*p - (*a + ab.scaled(u))).norm()
}

/// Run `bounces` reflections with the default configuration.
pub fn simulate<R: Real>(
    boundary: &Contour<R>,
    start: &ParticleState<R>,
    bounces: usize,
) -> Result<Trajectory<R>> {
    simulate_with(boundary, start, bounces, &BilliardConfig::default())
}

/// Run `bounces` reflections. Corner hits and grazing incidences end the run
/// early with the cause recorded in the trajectory.
pub fn simulate_with<R: Real>(
    boundary: &Contour<R>,
    start: &ParticleState<R>,
    bounces: usize,
    config: &BilliardConfig,
) -> Result<Trajectory<R>> {
    if bounces < 1 {
        return Err(Error::InvalidParams("need at least one bounce".into()));
    }
    let mut rng = config.noise.map(|n| ChaCha8Rng::seed_from_u64(n.seed));
    let mut state = *start;
    let mut reflections = Vec::with_capacity(bounces);
    let mut directions_after = Vec::with_capacity(bounces);
    let mut termination = Termination::Completed;
    for bounce in 1..=bounces {
        match first_hit(boundary, &state, config.corner_mode) {
            Ok((hit, normal)) => {
                let mut out = reflect(&state.direction, &normal);
                if let (Some(rng), Some(noise)) = (rng.as_mut(), config.noise.as_ref()) {
                    let theta: f64 = rng.gen_range(-noise.max_angle..=noise.max_angle);
                    out = rotate(&out, lit::<R>(theta));
                }
                reflections.push(LabeledPoint {
                    index: bounce,
                    position: hit,
                    curve_param: None,
                });
                directions_after.push(out);
                state = ParticleState {
                    position: hit,
                    direction: out,
                };
            }
            Err(Error::CornerHit { .. }) => {
                termination = Termination::CornerHit { bounce };
                break;
            }
            Err(Error::Grazing { .. }) => {
                termination = Termination::Grazing { bounce };
                break;
            }
            Err(e) => return Err(e),
        }
    }
    Ok(Trajectory {
        boundary: boundary.clone(),
        start: *start,
        reflections,
        directions_after,
        termination,
    })
}

fn rotate<R: Real>(v: &Vec2<R>, theta: R) -> Vec2<R> {
    let (s, c) = (theta.sin(), theta.cos());
    Vec2::new(c * v.x - s * v.y, s * v.x + c * v.y)
}

/// Slope-color the reflection points of a trajectory.
pub fn reflections_to_graph<R: Real>(
    trajectory: &Trajectory<R>,
    policy: DegeneracyPolicy,
) -> Result<ColoredCompleteGraph<ChordLine<R>>> {
    if trajectory.reflections.len() < 2 {
        return Err(Error::InvalidParams(
            "trajectory needs at least two reflection points".into(),
        ));
    }
    color_by_slope(&trajectory.reflections, policy)
}
