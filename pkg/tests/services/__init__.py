# Test per Service Layer
