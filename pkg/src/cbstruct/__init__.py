"""Recognition, certification and exhaustive checking of connected
(claw, bull)-free graphs."""
