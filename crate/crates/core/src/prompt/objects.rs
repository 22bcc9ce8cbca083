//! Urban object and context vocabulary used for prompt generation and
//! caption filtering.

/// 299 urban object noun phrases.
pub const URBAN_OBJECTS: &[&str] = &[
    "streetlight",
    "street light",
    "garbage",
    "garbage can",
    "trash can",
    "recycling bin",
    "dumpster",
    "street sign",
    "stop sign",
    "road sign",
    "traffic sign",
    "traffic light",
    "traffic cone",
    "traffic barrier",
    "person",
    "pedestrian",
    "cyclist",
    "child",
    "woman",
    "man",
    "dog",
    "cat",
    "bird",
    "pigeon",
    "horse",
    "sunglass",
    "market",
    "building",
    "tall building",
    "skyscraper",
    "apartment building",
    "office building",
    "house",
    "townhouse",
    "cottage",
    "villa",
    "church",
    "tower",
    "clock tower",
    "bell tower",
    "gate",
    "garage",
    "garage door",
    "parking garage",
    "stair",
    "staircase",
    "external staircase",
    "water tank",
    "street",
    "road",
    "highway",
    "avenue",
    "alley",
    "lane",
    "sidewalk",
    "crosswalk",
    "curb",
    "gutter",
    "manhole",
    "drain",
    "garden",
    "flower bed",
    "planter",
    "flower pot",
    "hedge",
    "bush",
    "shrub",
    "tree",
    "palm tree",
    "pine tree",
    "oak tree",
    "lawn",
    "grass",
    "park",
    "playground",
    "swing",
    "slide",
    "sandbox",
    "light fixture",
    "lamp",
    "lamp post",
    "lantern",
    "bench",
    "park bench",
    "umbrella",
    "parasol",
    "car",
    "taxi",
    "bus",
    "school bus",
    "truck",
    "van",
    "pickup truck",
    "motorcycle",
    "scooter",
    "bicycle",
    "bike rack",
    "tram",
    "train",
    "trolley",
    "ambulance",
    "fire truck",
    "police car",
    "parking meter",
    "parking lot",
    "parking space",
    "pipe",
    "water pipe",
    "stone walkway",
    "walkway",
    "footpath",
    "pathway",
    "window",
    "shop window",
    "door",
    "doorway",
    "entrance",
    "archway",
    "arch",
    "balcony",
    "terrace",
    "patio",
    "porch",
    "veranda",
    "roof",
    "rooftop",
    "chimney",
    "antenna",
    "satellite dish",
    "solar panel",
    "skylight",
    "wall",
    "concrete wall",
    "brick wall",
    "stone wall",
    "fence",
    "railing",
    "handrail",
    "pool",
    "swimming pool",
    "fountain",
    "statue",
    "monument",
    "sculpture",
    "obelisk",
    "column",
    "pillar",
    "chair",
    "table",
    "picnic table",
    "stool",
    "couch",
    "sofa",
    "cushion",
    "tv",
    "screen",
    "billboard",
    "poster",
    "banner",
    "flag",
    "flagpole",
    "map",
    "clock",
    "sign",
    "neon sign",
    "shop sign",
    "white line",
    "road marking",
    "bollard",
    "barrier",
    "fire hydrant",
    "hydrant",
    "tripod",
    "camera",
    "security camera",
    "cell phone",
    "wifi symbol",
    "curtain",
    "awning",
    "canopy",
    "tent",
    "kiosk",
    "newsstand",
    "booth",
    "phone booth",
    "bus stop",
    "bus shelter",
    "train station",
    "subway entrance",
    "bridge",
    "footbridge",
    "overpass",
    "tunnel",
    "river",
    "canal",
    "waterway",
    "pond",
    "lake",
    "dock",
    "pier",
    "boat",
    "sailboat",
    "ferry",
    "sailor",
    "cloud",
    "mountain",
    "hill",
    "rock",
    "boulder",
    "stone",
    "log",
    "crane",
    "scaffolding",
    "construction site",
    "ladder",
    "wheelbarrow",
    "shovel",
    "cart",
    "shopping cart",
    "stroller",
    "wheelchair",
    "suitcase",
    "backpack",
    "bag",
    "shopping bag",
    "box",
    "crate",
    "barrel",
    "bucket",
    "mailbox",
    "post box",
    "letterbox",
    "vending machine",
    "atm",
    "bike",
    "electric scooter",
    "charging station",
    "gas station",
    "fuel pump",
    "car wash",
    "warehouse",
    "factory",
    "chimney stack",
    "silo",
    "barn",
    "shed",
    "greenhouse",
    "gazebo",
    "pavilion",
    "stage",
    "stadium",
    "school",
    "hospital",
    "library",
    "museum",
    "theater",
    "cinema",
    "restaurant",
    "cafe",
    "bakery",
    "bar",
    "hotel",
    "shop",
    "store",
    "supermarket",
    "pharmacy",
    "bank",
    "post office",
    "police station",
    "fire station",
    "city hall",
    "courthouse",
    "castle",
    "palace",
    "temple",
    "mosque",
    "cathedral",
    "chapel",
    "cemetery",
    "tombstone",
    "plaque",
    "mural",
    "graffiti",
    "street art",
    "trash bag",
    "leaf",
    "puddle",
    "street vendor",
    "food truck",
    "ice cream truck",
    "delivery truck",
    "motorbike",
    "glass door",
    "sliding door",
    "revolving door",
    "elevator",
    "escalator",
    "ramp",
    "step",
];

/// The four urban contexts prompts are set in.
pub const URBAN_CONTEXTS: [&str; 4] = ["city", "street", "downtown area", "residential area"];
