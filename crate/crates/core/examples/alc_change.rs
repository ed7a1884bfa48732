//! Reception, eviction and revision of ALC concepts.

use model_change::change::{evict_alc, receive_alc, revise_alc, ChangeRequest};
use model_change::relations::equivalent;
use model_change::scenarios::{koala_signature, koala_worlds, platypus_worlds, zoo_signature};
use model_change::{model_check, Concept};

fn main() -> model_change::Result<()> {
    let sig = zoo_signature();
    let base: Concept = "Mammal and exists lays.Egg".parse()?;
    let (carnivore, herbivore) = platypus_worlds();

    let evicted = evict_alc(&base, std::slice::from_ref(&herbivore), &sig)?;
    println!("evict the herbivore world: {evicted}");
    println!("  carnivore world kept: {}", model_check(&carnivore, &evicted));
    println!("  herbivore world kept: {}", model_check(&herbivore, &evicted));

    let narrow: Concept = "Mammal and not Herbivore and exists lays.Egg".parse()?;
    let received = receive_alc(&narrow, std::slice::from_ref(&herbivore), &sig)?;
    println!("receive the herbivore world into {narrow}: {received}");
    println!(
        "  herbivore world now a model: {}",
        model_check(&herbivore, &received)
    );

    let (non_placental, placental) = koala_worlds();
    let request = ChangeRequest::new(
        "Mammal and Marsupial and not Placental".parse()?,
        koala_signature(),
        vec![placental],
        vec![non_placental],
    )?;
    let revised = revise_alc(&request)?;
    println!("revised koala base: {revised}");
    println!(
        "  equivalent to Mammal and Marsupial and Placental: {}",
        equivalent(&revised, &"Mammal and Marsupial and Placental".parse()?)
    );
    Ok(())
}
